#pragma once

#include <utility>

#include "chwaves/errors.hpp"

namespace chwaves {

// Traveling-wave parameters: integration constants a, b and wave speed c > 0.
// The wave ODE system in terms of the profile phi(x) is
//   -(c - phi) phi'' + c phi - (3/2) phi^2 + (1/2) phi'^2 = b,
//   -(c - phi)^2 (phi'' - phi) = a,
//   (c - phi)(phi'^2 - phi^2 - 2b) + 2a = 0,
// and any one of the three implies the other two.
struct WaveParams {
  double a;
  double b;
  double c;
};

// Roots of a = phi (c - phi)^2, ordered 0 < phi1 < c/3 < phi2 < c < phi3.
struct CubicRoots {
  double phi1;
  double phi2;
  double phi3;
};

// Turning points of the profile: roots of (c - phi)(2b + phi^2) = 2a with
// phi1 < phi_minus < phi2 < phi_plus < c.
struct TurningPoints {
  double phi_minus;
  double phi_plus;
};

enum class RegionClass {
  Interior,
  BoundaryConstant,   // b = b_-(a): profile degenerates to phi = phi2
  BoundarySolitary,   // b = b_+(a): infinite period
  BoundaryPeaked,     // a = 0, b in (-c^2/2, 0)
  Outside,
};

const char* to_string(RegionClass rc);

// a_c = 4 c^3 / 27, the fold of the cubic a = phi (c - phi)^2.
double critical_value_a(double c);

// Roots of a = phi (c - phi)^2 for 0 < a < a_c(c).  Throws DegenerateRoots
// within 1e-12 * a_c of either end, NotInRegion outside (0, a_c).
CubicRoots cubic_roots(double a, double c);

// Newton potential U(phi) = -phi^2/2 + a/(c - phi); the wave obeys
// b = phi'^2/2 + U(phi).  Pole at phi = c when a != 0.
double newton_potential(double phi, const WaveParams& p);

// Existence-region boundaries in b at fixed a:  b_- = U(phi2) (constant
// limit), b_+ = U(phi1) (solitary limit); both equal c*phi - (3/2) phi^2 at
// the respective root.
double boundary_b_minus(double a, double c);
double boundary_b_plus(double a, double c);

// Inverses of the boundary curves, solved in closed form from the
// parameterization b = c*phi - (3/2) phi^2, a = phi (c - phi)^2.
double boundary_a_minus(double b, double c);  // b in (-c^2/2, c^2/6)
double boundary_a_plus(double b, double c);   // b in (0, c^2/6)

TurningPoints turning_points(const WaveParams& p);

// Strict open-region membership (no tolerance band): 0 < a < a_c and
// b_-(a) < b < b_+(a).
bool strictly_inside(const WaveParams& p);

// Classification with a tolerance band, measured in the scale-normalized
// coordinates alpha = a/c^3, beta = b/c^2.  tol must be >= 1e-12.
RegionClass classify(const WaveParams& p, double tol = 1e-9);

// Scaling normalization (alpha, beta) = (a/c^3, b/c^2); (alpha, beta, 1)
// classifies identically to (a, b, c).
std::pair<double, double> normalize_scaling(const WaveParams& p);

}  // namespace chwaves
