#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chwaves/errors.hpp"

namespace chwaves {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes and weights by Newton iteration on the Legendre polynomial; cached
// per order (function-local statics, safe under concurrent use).
const GaussLegendreRule& gauss_legendre(int n);

// Single n-node panel over [a, b].
template <class F>
double gl_panel(F&& f, double a, double b, int n) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// Composite Gauss-Legendre over [a, b]: 32 nodes per panel, panel count
// doubled until two successive estimates agree to rel_tol.  Returns the last
// estimate once the panel cap is reached (integrands with a localized kink
// converge past the cap only slowly, and the cap already gives ~1e-6).
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-12,
                          int max_panels = 8192, int nodes = 32) {
  auto composite = [&](int panels) {
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p)
      sum += gl_panel(f, a + p * h, a + (p + 1) * h, nodes);
    return sum;
  };
  double prev = composite(1);
  for (int panels = 2; panels <= max_panels; panels *= 2) {
    const double cur = composite(panels);
    const double scale = std::max({1e-300, std::fabs(cur), std::fabs(prev)});
    if (std::fabs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

// Cumulative integrals of f at the breakpoints xs (xs[0] maps to 0).  Each
// subinterval is integrated with one 16-node panel, so the result is at
// quadrature accuracy for analytic integrands on fine tables.
template <class F>
std::vector<double> cumulative_integral(F&& f, const std::vector<double>& xs) {
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t i = 1; i < xs.size(); ++i)
    out[i] = out[i - 1] + gl_panel(f, xs[i - 1], xs[i], 16);
  return out;
}

}  // namespace chwaves
