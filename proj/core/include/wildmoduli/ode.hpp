#pragma once

// Explicit integrators for matrix-valued ODEs dY/dt = f(t, Y).

#include <functional>

#include "wildmoduli/jetcore.hpp"

namespace wildmoduli {

using MatrixField = std::function<ComplexMatrix(double, const ComplexMatrix&)>;

struct AdaptiveOptions {
  double tol = 1e-10;  ///< absolute and relative local error target
  double initial_step = 1e-2;
  double min_step = 1e-14;
  long max_steps = 2'000'000;
};

struct IntegrationStats {
  long accepted = 0;
  long rejected = 0;
};

/// Dormand-Prince 5(4) with per-step error control; integrates from t0 to t1.
ComplexMatrix integrate_adaptive(const MatrixField& f, ComplexMatrix y0, double t0, double t1,
                                 const AdaptiveOptions& options = {}, IntegrationStats* stats = nullptr);

/// Classical fixed-step RK4.
ComplexMatrix integrate_rk4(const MatrixField& f, ComplexMatrix y0, double t0, double t1, long steps);

}  // namespace wildmoduli
