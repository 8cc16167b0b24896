#pragma once

#include <array>
#include <cmath>

#include "chwaves/errors.hpp"

namespace chwaves {

struct OdeOptions {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  int max_steps = 2000000;
};

// Adaptive Dormand-Prince 5(4) integrator for a small fixed-size system.
// rhs(t, y, dy) fills dy.  Integrates from t0 to t1 (t1 > t0) and returns the
// final state.
template <int N, class F>
std::array<double, N> integrate_ode(F&& rhs, double t0, double t1,
                                    std::array<double, N> y,
                                    const OdeOptions& opt = {}) {
  using Vec = std::array<double, N>;
  // Dormand-Prince tableau.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  double t = t0;
  double h = (t1 - t0) / 100.0;
  Vec k1, k2, k3, k4, k5, k6, k7, yt, y5;
  rhs(t, y, k1);
  for (int step = 0; step < opt.max_steps; ++step) {
    if (t >= t1) return y;
    if (t + h > t1) h = t1 - t;

    auto stage = [&](const Vec& base, double dt, Vec& out) { rhs(t + dt, base, out); };
    for (int i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    stage(yt, c2 * h, k2);
    for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    stage(yt, c3 * h, k3);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    stage(yt, c4 * h, k4);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    stage(yt, c5 * h, k5);
    for (int i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                          a65 * k5[i]);
    stage(yt, h, k6);
    for (int i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    stage(y5, h, k7);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc = opt.abs_tol +
                        opt.rel_tol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
      err = std::max(err, std::fabs(ei) / sc);
    }
    if (err <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
    if (!(h > 0.0) || !std::isfinite(err))
      throw IntegrationFailure("integrate_ode: step size collapsed");
  }
  throw IntegrationFailure("integrate_ode: step budget exhausted");
}

}  // namespace chwaves
