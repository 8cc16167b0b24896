#include "chwaves/wave_family.hpp"

#include <cmath>

#include "chwaves/roots.hpp"

namespace chwaves {

const char* to_string(RegionClass rc) {
  switch (rc) {
    case RegionClass::Interior: return "interior";
    case RegionClass::BoundaryConstant: return "boundary_constant";
    case RegionClass::BoundarySolitary: return "boundary_solitary";
    case RegionClass::BoundaryPeaked: return "boundary_peaked";
    case RegionClass::Outside: return "outside";
  }
  return "unknown";
}

double critical_value_a(double c) {
  if (!(c > 0.0)) throw std::domain_error("critical_value_a: requires c > 0");
  return 4.0 * c * c * c / 27.0;
}

CubicRoots cubic_roots(double a, double c) {
  const double ac = critical_value_a(c);
  if (!(a > 0.0 && a < ac))
    throw NotInRegion("cubic_roots: a outside (0, a_c)");
  if (a < 1e-12 * ac || ac - a < 1e-12 * ac)
    throw DegenerateRoots("cubic_roots: a too close to 0 or a_c");

  auto f = [&](double p) { return p * (c - p) * (c - p) - a; };
  auto df = [&](double p) { return (c - p) * (c - 3.0 * p); };

  // Guaranteed brackets from the ordering 0 < phi1 < c/3 < phi2 < c < phi3.
  // The root sum is 2c, so phi3 < 2c.
  CubicRoots r;
  r.phi1 = newton_bracketed(f, df, 0.0, c / 3.0);
  r.phi2 = newton_bracketed(f, df, c / 3.0, c);
  r.phi3 = newton_bracketed(f, df, c, 2.0 * c);
  return r;
}

double newton_potential(double phi, const WaveParams& p) {
  if (phi == p.c && p.a != 0.0)
    throw std::domain_error("newton_potential: pole at phi = c");
  return -0.5 * phi * phi + (p.a == 0.0 ? 0.0 : p.a / (p.c - phi));
}

double boundary_b_minus(double a, double c) {
  const CubicRoots r = cubic_roots(a, c);
  return c * r.phi2 - 1.5 * r.phi2 * r.phi2;
}

double boundary_b_plus(double a, double c) {
  const CubicRoots r = cubic_roots(a, c);
  return c * r.phi1 - 1.5 * r.phi1 * r.phi1;
}

double boundary_a_minus(double b, double c) {
  if (!(c > 0.0)) throw std::domain_error("boundary_a_minus: requires c > 0");
  if (!(b > -0.5 * c * c && b < c * c / 6.0))
    throw NotInRegion("boundary_a_minus: b outside (-c^2/2, c^2/6)");
  // phi2 is the root of b = c phi - (3/2) phi^2 above c/3.
  const double phi2 = (c + std::sqrt(c * c - 6.0 * b)) / 3.0;
  return phi2 * (c - phi2) * (c - phi2);
}

double boundary_a_plus(double b, double c) {
  if (!(c > 0.0)) throw std::domain_error("boundary_a_plus: requires c > 0");
  if (!(b > 0.0 && b < c * c / 6.0))
    throw NotInRegion("boundary_a_plus: b outside (0, c^2/6)");
  const double phi1 = (c - std::sqrt(c * c - 6.0 * b)) / 3.0;
  return phi1 * (c - phi1) * (c - phi1);
}

TurningPoints turning_points(const WaveParams& p) {
  const CubicRoots r = cubic_roots(p.a, p.c);
  const double bm = p.c * r.phi2 - 1.5 * r.phi2 * r.phi2;
  const double bp = p.c * r.phi1 - 1.5 * r.phi1 * r.phi1;
  if (!(p.b > bm && p.b < bp))
    throw NotInRegion("turning_points: b outside (b_-(a), b_+(a))");

  auto g = [&](double phi) {
    return (p.c - phi) * (2.0 * p.b + phi * phi) - 2.0 * p.a;
  };
  auto dg = [&](double phi) {
    return 2.0 * (p.c * phi - 1.5 * phi * phi - p.b);
  };

  // g < 0 at phi1 and at c, g > 0 at phi2, so both brackets change sign.
  TurningPoints tp;
  tp.phi_minus = newton_bracketed(g, dg, r.phi1, r.phi2);
  tp.phi_plus = newton_bracketed(g, dg, r.phi2, p.c);
  return tp;
}

bool strictly_inside(const WaveParams& p) {
  if (!(p.c > 0.0)) return false;
  const double ac = critical_value_a(p.c);
  if (!(p.a > 0.0 && p.a < ac)) return false;
  if (p.a < 1e-12 * ac || ac - p.a < 1e-12 * ac) return false;
  const CubicRoots r = cubic_roots(p.a, p.c);
  const double bm = p.c * r.phi2 - 1.5 * r.phi2 * r.phi2;
  const double bp = p.c * r.phi1 - 1.5 * r.phi1 * r.phi1;
  return p.b > bm && p.b < bp;
}

RegionClass classify(const WaveParams& p, double tol) {
  if (!(p.c > 0.0)) throw std::domain_error("classify: requires c > 0");
  if (!(tol >= 1e-12)) throw std::domain_error("classify: tol must be >= 1e-12");
  const double alpha = p.a / (p.c * p.c * p.c);
  const double beta = p.b / (p.c * p.c);
  const double alpha_c = 4.0 / 27.0;

  if (alpha < -tol || alpha > alpha_c + tol) return RegionClass::Outside;

  if (std::fabs(alpha) <= tol) {
    // Peaked boundary a = 0, b in (-c^2/2, 0); its endpoints join the other
    // two boundaries.
    if (beta > -0.5 - tol && beta < tol) return RegionClass::BoundaryPeaked;
    return RegionClass::Outside;
  }
  if (alpha >= alpha_c - tol) {
    // Corner where the constant and solitary boundaries meet at b = c^2/6.
    return (std::fabs(beta - 1.0 / 6.0) <= tol) ? RegionClass::BoundaryConstant
                                                : RegionClass::Outside;
  }

  const CubicRoots r = cubic_roots(alpha, 1.0);
  const double beta_minus = r.phi2 - 1.5 * r.phi2 * r.phi2;
  const double beta_plus = r.phi1 - 1.5 * r.phi1 * r.phi1;
  if (beta < beta_minus - tol || beta > beta_plus + tol) return RegionClass::Outside;
  if (beta <= beta_minus + tol) return RegionClass::BoundaryConstant;
  if (beta >= beta_plus - tol) return RegionClass::BoundarySolitary;
  return RegionClass::Interior;
}

std::pair<double, double> normalize_scaling(const WaveParams& p) {
  if (!(p.c > 0.0)) throw std::domain_error("normalize_scaling: requires c > 0");
  return {p.a / (p.c * p.c * p.c), p.b / (p.c * p.c)};
}

}  // namespace chwaves
