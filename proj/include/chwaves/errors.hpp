#pragma once

#include <stdexcept>
#include <string>

namespace chwaves {

// Base class for recoverable numerical failures.  Argument-domain violations
// (bad modulus, nonpositive wave speed, ...) use std::domain_error directly.
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters (a,b) fall outside the existence region for the given c.
struct NotInRegion : NumericsError {
  using NumericsError::NumericsError;
};

// Cubic roots requested too close to a = 0 or a = a_c, where two roots
// coalesce and downstream quadratures become singular.
struct DegenerateRoots : NumericsError {
  using NumericsError::NumericsError;
};

struct QuadratureFailure : NumericsError {
  using NumericsError::NumericsError;
};

// Finite-difference stencil would straddle the region boundary.
struct DerivativeFailure : NumericsError {
  using NumericsError::NumericsError;
};

// The fixed-period family is not C^1 in b at this point (period slope in a
// vanishes), so the b-parameterized projection matrix is unbounded.
struct SingularFamily : NumericsError {
  using NumericsError::NumericsError;
};

// Profile is not resolved on the requested collocation grid.
struct ResolutionError : NumericsError {
  using NumericsError::NumericsError;
};

struct IntegrationFailure : NumericsError {
  using NumericsError::NumericsError;
};

struct NoSolution : NumericsError {
  using NumericsError::NumericsError;
};

}  // namespace chwaves
