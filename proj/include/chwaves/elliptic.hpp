#pragma once

namespace chwaves {

// Complete elliptic integral of the first kind,
//   K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
// computed by the arithmetic-geometric mean iteration.  The argument is the
// modulus k (not the parameter m = k^2).  Valid for 0 <= k < 1; k = 1 is the
// solitary-wave limit and is rejected, callers handle it analytically.
double complete_K(double k);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Jacobi elliptic functions sn, cn, dn in one pass, computed by the
// descending Landen transformation seeded from the AGM sequence.  Accuracy is
// uniform over k in [0, 1 - 1e-9]; no series switching.
JacobiTriple jacobi_scd(double u, double k);

double jacobi_cn(double u, double k);
double jacobi_sn(double u, double k);
double jacobi_dn(double u, double k);

}  // namespace chwaves
