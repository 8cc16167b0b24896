#include "chwaves/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace chwaves {

namespace {

constexpr int kMaxAgm = 32;

void check_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw std::domain_error("elliptic: modulus k must lie in [0,1)");
}

}  // namespace

double complete_K(double k) {
  check_modulus(k);
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < kMaxAgm && std::fabs(a - b) > 0.5e-16 * a; ++i) {
    const double am = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = am;
  }
  return M_PI / (2.0 * a);
}

JacobiTriple jacobi_scd(double u, double k) {
  check_modulus(k);
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};

  // AGM sequence a_n, c_n with a_0 = 1, b_0 = k', c_0 = k.
  std::array<double, kMaxAgm> aa{};
  std::array<double, kMaxAgm> cc{};
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double c = k;
  aa[0] = a;
  cc[0] = c;
  int n = 0;
  while (std::fabs(c) > 0.5e-16 * a && n + 1 < kMaxAgm) {
    const double am = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = am;
    ++n;
    aa[n] = a;
    cc[n] = c;
  }

  // Backward amplitude recurrence: phi_{n-1} = (phi_n + asin((c_n/a_n) sin phi_n))/2.
  double phi = std::ldexp(a * u, n);
  double phi1 = phi;  // keeps phi_1 for the dn formula
  for (int i = n; i > 0; --i) {
    const double s = std::clamp(cc[i] / aa[i] * std::sin(phi), -1.0, 1.0);
    phi1 = phi;
    phi = 0.5 * (phi + std::asin(s));
  }

  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  double dn;
  if (n == 0) {
    dn = std::sqrt(1.0 - k * k * sn * sn);
  } else {
    dn = cn / std::cos(phi1 - phi);
  }
  return {sn, cn, dn};
}

double jacobi_cn(double u, double k) { return jacobi_scd(u, k).cn; }

double jacobi_sn(double u, double k) { return jacobi_scd(u, k).sn; }

double jacobi_dn(double u, double k) { return jacobi_scd(u, k).dn; }

}  // namespace chwaves
