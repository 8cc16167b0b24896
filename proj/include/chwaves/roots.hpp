#pragma once

#include <cmath>
#include <utility>

#include "chwaves/errors.hpp"

namespace chwaves {

// Bisection on a sign-changing bracket [lo, hi].  Stops when the bracket
// width falls below xtol (absolute) or the midpoint value is exactly zero.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 0.0, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSolution("bisect: endpoints do not bracket a root");
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= xtol) break;
  }
  return 0.5 * (lo + hi);
}

// Newton iteration safeguarded by a maintained bracket: a Newton step that
// leaves the bracket, or fails to shrink it fast enough, falls back to
// bisection.  Both endpoints must bracket a root.
template <class F, class DF>
double newton_bracketed(F&& f, DF&& df, double lo, double hi, int max_iter = 100) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSolution("newton_bracketed: endpoints do not bracket a root");
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int i = 0; i < max_iter; ++i) {
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = df(x);
    double step = (d != 0.0) ? fx / d : 0.0;
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) return x;
    x = xn;
    fx = f(x);
    if (hi - lo <= 4.0 * std::fabs(x) * 1e-17) return x;
  }
  return x;
}

}  // namespace chwaves
