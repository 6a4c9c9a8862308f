#include "wildmoduli/ode.hpp"

#include <algorithm>
#include <cmath>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

namespace {

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (fifth minus fourth order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

ComplexMatrix integrate_adaptive(const MatrixField& f, ComplexMatrix y, double t0, double t1,
                                 const AdaptiveOptions& options, IntegrationStats* stats) {
  IntegrationStats local;
  IntegrationStats& st = stats ? *stats : local;
  if (t1 == t0) return y;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double h = std::min(options.initial_step, span);
  double t = t0;
  ComplexMatrix k1 = f(t, y);
  long steps = 0;
  while (dir * (t1 - t) > 1e-15 * span) {
    if (++steps > options.max_steps) throw GeometryError("integrate_adaptive: step budget exhausted");
    h = std::min(h, std::abs(t1 - t));
    const double hs = dir * h;
    const ComplexMatrix k2 = f(t + c2 * hs, y + hs * (a21 * k1));
    const ComplexMatrix k3 = f(t + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
    const ComplexMatrix k4 = f(t + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const ComplexMatrix k5 = f(t + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const ComplexMatrix k6 = f(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const ComplexMatrix ynew = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const ComplexMatrix k7 = f(t + hs, ynew);
    const ComplexMatrix err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double ratio = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
      const double scale = options.tol * (1.0 + std::max(std::abs(y(i)), std::abs(ynew(i))));
      ratio = std::max(ratio, std::abs(err(i)) / scale);
    }
    if (ratio <= 1.0) {
      t += hs;
      y = ynew;
      k1 = k7;
      ++st.accepted;
    } else {
      ++st.rejected;
    }
    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < options.min_step) throw GeometryError("integrate_adaptive: step size underflow (stiff or singular path)");
  }
  return y;
}

ComplexMatrix integrate_rk4(const MatrixField& f, ComplexMatrix y, double t0, double t1, long steps) {
  if (steps <= 0) throw DimensionError("integrate_rk4 needs a positive step count");
  const double h = (t1 - t0) / static_cast<double>(steps);
  double t = t0;
  for (long i = 0; i < steps; ++i) {
    const ComplexMatrix k1 = f(t, y);
    const ComplexMatrix k2 = f(t + h / 2, y + (h / 2) * k1);
    const ComplexMatrix k3 = f(t + h / 2, y + (h / 2) * k2);
    const ComplexMatrix k4 = f(t + h, y + h * k3);
    y += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + static_cast<double>(i + 1) * h;
  }
  return y;
}

}  // namespace wildmoduli
