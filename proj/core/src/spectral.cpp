#include "wildmoduli/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "wildmoduli/errors.hpp"
#include "wildmoduli/laurent.hpp"

namespace wildmoduli {

namespace {

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }

void require_simple_poles(const RationalMatrix& a, const char* what) {
  if (!a.simple_poles()) {
    throw UnsupportedError(std::string(what) + " supports simple poles only");
  }
}

}  // namespace

// RationalMatrix --------------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Pole> poles, std::vector<ComplexMatrix> poly)
    : n_(n), poles_(std::move(poles)), poly_(std::move(poly)) {
  const auto sz = static_cast<Eigen::Index>(n_);
  for (std::size_t t = 0; t < poles_.size(); ++t) {
    const auto& p = poles_[t];
    if (p.parts.empty()) throw OrderError("pole " + std::to_string(t) + " has no principal part");
    for (const auto& m : p.parts) {
      require_square_finite(m, "RationalMatrix");
      if (m.rows() != sz) throw DimensionError("pole " + std::to_string(t) + " has a part of the wrong size");
    }
    if (p.parts.size() > 1 && max_abs(p.parts.back()) == 0.0) {
      throw OrderError("pole " + std::to_string(t) + " has a zero leading coefficient");
    }
    for (std::size_t s = 0; s < t; ++s) {
      if (poles_[s].position == p.position) {
        throw DistinctnessError("poles " + std::to_string(s) + " and " + std::to_string(t) + " coincide");
      }
    }
  }
  for (const auto& m : poly_) {
    require_square_finite(m, "RationalMatrix");
    if (m.rows() != sz) throw DimensionError("polynomial part has the wrong size");
  }
}

RationalMatrix RationalMatrix::fuchsian(const std::vector<Complex>& positions,
                                        const std::vector<ComplexMatrix>& residues) {
  if (positions.size() != residues.size()) throw DimensionError("one residue per pole expected");
  if (residues.empty()) throw DimensionError("fuchsian system needs at least one pole");
  std::vector<Pole> poles;
  for (std::size_t t = 0; t < positions.size(); ++t) poles.push_back({positions[t], {residues[t]}});
  return RationalMatrix(static_cast<std::size_t>(residues[0].rows()), std::move(poles));
}

bool RationalMatrix::simple_poles() const noexcept {
  return std::all_of(poles_.begin(), poles_.end(), [](const Pole& p) { return p.parts.size() == 1; });
}

ComplexMatrix RationalMatrix::operator()(Complex z) const {
  const auto sz = static_cast<Eigen::Index>(n_);
  ComplexMatrix out = ComplexMatrix::Zero(sz, sz);
  for (const auto& p : poles_) {
    const Complex inv = 1.0 / (z - p.position);
    Complex w = inv;
    for (const auto& part : p.parts) {
      out += w * part;
      w *= inv;
    }
  }
  Complex zj = 1.0;
  for (const auto& m : poly_) {
    out += zj * m;
    zj *= z;
  }
  return out;
}

ComplexMatrix RationalMatrix::stacked_residues() const {
  const auto sz = static_cast<Eigen::Index>(n_);
  ComplexMatrix out(sz, sz * static_cast<Eigen::Index>(poles_.size()));
  for (std::size_t t = 0; t < poles_.size(); ++t) {
    out.middleCols(static_cast<Eigen::Index>(t) * sz, sz) = poles_[t].parts[0];
  }
  return out;
}

RationalMatrix RationalMatrix::with_residues(const ComplexMatrix& stacked) const {
  const auto sz = static_cast<Eigen::Index>(n_);
  std::vector<Pole> poles = poles_;
  for (std::size_t t = 0; t < poles.size(); ++t) {
    poles[t].parts[0] = stacked.middleCols(static_cast<Eigen::Index>(t) * sz, sz);
  }
  return RationalMatrix(n_, std::move(poles), poly_);
}

RationalMatrix RationalMatrix::with_position(std::size_t pole, Complex position) const {
  std::vector<Pole> poles = poles_;
  poles.at(pole).position = position;
  return RationalMatrix(n_, std::move(poles), poly_);
}

// Spectral invariants ---------------------------------------------------------

namespace {

// Laurent expansion of A at pole t in w = z - a_t, powers -k_t .. max_power.
MatrixLaurent expansion_at_pole(const RationalMatrix& a, std::size_t t, int max_power) {
  const auto& pole = a.poles()[t];
  const int k = static_cast<int>(pole.parts.size());
  MatrixLaurent series(a.n(), -k, std::max(max_power, -1));
  for (int i = 1; i <= k; ++i) series.at(-i) = pole.parts[static_cast<std::size_t>(i - 1)];
  for (int m = 0; m <= max_power; ++m) {
    ComplexMatrix& c = series.at(m);
    for (std::size_t s = 0; s < a.poles().size(); ++s) {
      if (s == t) continue;
      // (w + delta)^{-i} = sum_m (-1)^m C(i+m-1, m) delta^{-i-m} w^m
      const Complex delta = pole.position - a.poles()[s].position;
      const auto& parts = a.poles()[s].parts;
      for (int i = 1; i <= static_cast<int>(parts.size()); ++i) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        c += (sign * binomial(i + m - 1, m) * std::pow(delta, -(i + m))) * parts[static_cast<std::size_t>(i - 1)];
      }
    }
    // (w + a_t)^j = sum_m C(j, m) a_t^{j-m} w^m
    for (int j = m; j <= a.poly_degree(); ++j) {
      c += (binomial(j, m) * std::pow(pole.position, j - m)) * a.poly()[static_cast<std::size_t>(j)];
    }
  }
  return series;
}

// Expansion of A at infinity in u = 1/z, powers -D .. max_power.
MatrixLaurent expansion_at_infinity(const RationalMatrix& a, int max_power) {
  const int deg = std::max(a.poly_degree(), 0);
  MatrixLaurent series(a.n(), -deg, max_power);
  for (int j = 0; j <= a.poly_degree(); ++j) series.at(-j) += a.poly()[static_cast<std::size_t>(j)];
  for (const auto& pole : a.poles()) {
    // (z - a)^{-i} = u^i (1 - a u)^{-i} = sum_m C(i+m-1, m) a^m u^{i+m}
    for (int i = 1; i <= static_cast<int>(pole.parts.size()); ++i) {
      for (int m = 0; i + m <= max_power; ++m) {
        series.at(i + m) += (binomial(i + m - 1, m) * std::pow(pole.position, m)) *
                            pole.parts[static_cast<std::size_t>(i - 1)];
      }
    }
  }
  return series;
}

// p-th power truncated to powers <= target, for a series with lowest power `low`.
MatrixLaurent truncated_power(const MatrixLaurent& base, int p, int target) {
  const int low = base.low();
  MatrixLaurent acc = base;
  for (int q = 1; q < p; ++q) {
    // p - q - 1 factors remain after this product, each contributing >= low.
    const int keep = target - (p - q - 1) * low;
    acc = acc.multiply(base, keep);
  }
  return acc;
}

}  // namespace

ScalarPartialFractions trace_power(const RationalMatrix& a, int p) {
  if (p < 1) throw DimensionError("trace_power needs p >= 1");
  ScalarPartialFractions out;
  for (std::size_t t = 0; t < a.poles().size(); ++t) {
    const int k = static_cast<int>(a.poles()[t].parts.size());
    const MatrixLaurent local = expansion_at_pole(a, t, (p - 1) * k - 1);
    const MatrixLaurent power = truncated_power(local, p, -1);
    std::vector<Complex> coeffs;
    for (int order = 1; order <= p * k; ++order) coeffs.push_back(power.coefficient(-order).trace() / double(p));
    out.poles.push_back(std::move(coeffs));
  }
  if (a.poly_degree() >= 0) {
    const int deg = a.poly_degree();
    const MatrixLaurent at_inf = expansion_at_infinity(a, (p - 1) * deg);
    const MatrixLaurent power = truncated_power(at_inf, p, 0);
    for (int m = 0; m <= p * deg; ++m) out.poly.push_back(power.coefficient(-m).trace() / double(p));
  }
  return out;
}

SpectralInvariants spectral_invariants(const RationalMatrix& a) {
  SpectralInvariants out;
  for (int p = 1; p <= static_cast<int>(a.n()); ++p) {
    const ScalarPartialFractions pf = trace_power(a, p);
    for (std::size_t t = 0; t < pf.poles.size(); ++t) {
      for (std::size_t o = 0; o < pf.poles[t].size(); ++o) {
        out.values.push_back(pf.poles[t][o]);
        out.labels.push_back({p, static_cast<int>(t), static_cast<int>(o + 1)});
      }
    }
    for (std::size_t m = 0; m < pf.poly.size(); ++m) {
      out.values.push_back(pf.poly[m]);
      out.labels.push_back({p, -1, static_cast<int>(m)});
    }
  }
  return out;
}

ScalarFunction invariant_function(const RationalMatrix& shape, std::size_t index) {
  const SpectralInvariants inv = spectral_invariants(shape);
  if (index >= inv.labels.size()) {
    throw DimensionError("invariant index " + std::to_string(index) + " out of range (" +
                         std::to_string(inv.labels.size()) + " invariants)");
  }
  const InvariantLabel label = inv.labels[index];
  return [label](const RationalMatrix& a) {
    const ScalarPartialFractions pf = trace_power(a, label.power);
    if (label.pole < 0) return pf.poly.at(static_cast<std::size_t>(label.order));
    return pf.poles.at(static_cast<std::size_t>(label.pole)).at(static_cast<std::size_t>(label.order - 1));
  };
}

// Lie-Poisson structure -------------------------------------------------------

namespace {

void require_bracket_shape(const RationalMatrix& a) {
  require_simple_poles(a, "Lie-Poisson bracket");
  if (a.poly_degree() > 0) {
    throw UnsupportedError("Lie-Poisson bracket allows at most a constant polynomial part");
  }
}

// Evaluates `values(A +- h E_rc)` for every residue entry and returns central
// differences: result[t](c, r) = d/dA_t(r, c) for each output component.
template <typename Eval>
std::vector<std::vector<ComplexMatrix>> finite_difference_gradients(const RationalMatrix& a, double h,
                                                                    std::size_t outputs, Eval values) {
  const auto sz = static_cast<Eigen::Index>(a.n());
  const std::size_t m = a.poles().size();
  std::vector<std::vector<ComplexMatrix>> grads(outputs, std::vector<ComplexMatrix>(m, ComplexMatrix::Zero(sz, sz)));
  const ComplexMatrix base = a.stacked_residues();
  for (std::size_t t = 0; t < m; ++t) {
    for (Eigen::Index r = 0; r < sz; ++r) {
      for (Eigen::Index c = 0; c < sz; ++c) {
        ComplexMatrix plus = base;
        ComplexMatrix minus = base;
        plus(r, static_cast<Eigen::Index>(t) * sz + c) += h;
        minus(r, static_cast<Eigen::Index>(t) * sz + c) -= h;
        const std::vector<Complex> fp = values(a.with_residues(plus));
        const std::vector<Complex> fm = values(a.with_residues(minus));
        for (std::size_t o = 0; o < outputs; ++o) grads[o][t](c, r) = (fp[o] - fm[o]) / (2.0 * h);
      }
    }
  }
  return grads;
}

Complex assemble_bracket(const RationalMatrix& a, const std::vector<ComplexMatrix>& gf,
                         const std::vector<ComplexMatrix>& gg) {
  Complex acc{};
  for (std::size_t t = 0; t < a.poles().size(); ++t) {
    acc += (a.poles()[t].parts[0] * commutator(gf[t], gg[t])).trace();
  }
  return acc;
}

}  // namespace

std::vector<ComplexMatrix> residue_gradient(const RationalMatrix& a, const ScalarFunction& f, double h) {
  require_simple_poles(a, "residue_gradient");
  auto grads = finite_difference_gradients(a, h, 1, [&](const RationalMatrix& x) {
    return std::vector<Complex>{f(x)};
  });
  return std::move(grads[0]);
}

Complex lie_poisson_bracket(const RationalMatrix& a, const ScalarFunction& f, const ScalarFunction& g, double h) {
  require_bracket_shape(a);
  auto grads = finite_difference_gradients(a, h, 2, [&](const RationalMatrix& x) {
    return std::vector<Complex>{f(x), g(x)};
  });
  return assemble_bracket(a, grads[0], grads[1]);
}

Complex lie_poisson_bracket(const RationalMatrix& a, std::size_t f, std::size_t g, double h) {
  return lie_poisson_bracket(a, invariant_function(a, f), invariant_function(a, g), h);
}

ComplexMatrix invariant_brackets(const RationalMatrix& a, double h) {
  require_bracket_shape(a);
  const std::size_t count = spectral_invariants(a).values.size();
  const auto grads = finite_difference_gradients(a, h, count, [](const RationalMatrix& x) {
    return spectral_invariants(x).values;
  });
  const auto sz = static_cast<Eigen::Index>(count);
  ComplexMatrix out = ComplexMatrix::Zero(sz, sz);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Complex b = assemble_bracket(a, grads[i], grads[j]);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b;
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = -b;
    }
  }
  return out;
}

FlowResult isospectral_flow(const RationalMatrix& a, std::size_t hamiltonian, double duration, long steps,
                            double h, double warn_drift) {
  require_bracket_shape(a);
  const ScalarFunction ham = invariant_function(a, hamiltonian);
  const SpectralInvariants before = spectral_invariants(a);
  if (duration == 0.0) return {a, 0.0, false};
  const auto sz = static_cast<Eigen::Index>(a.n());
  const MatrixField field = [&](double, const ComplexMatrix& stacked) {
    const RationalMatrix current = a.with_residues(stacked);
    const auto grad = residue_gradient(current, ham, h);
    ComplexMatrix out(stacked.rows(), stacked.cols());
    for (std::size_t t = 0; t < grad.size(); ++t) {
      const auto block = stacked.middleCols(static_cast<Eigen::Index>(t) * sz, sz);
      out.middleCols(static_cast<Eigen::Index>(t) * sz, sz) = commutator(grad[t], block);
    }
    return out;
  };
  const ComplexMatrix end = integrate_rk4(field, a.stacked_residues(), 0.0, duration, steps);
  FlowResult result{a.with_residues(end), 0.0, false};
  const SpectralInvariants after = spectral_invariants(result.matrix);
  for (std::size_t i = 0; i < before.values.size(); ++i) {
    const double scale = std::max(1.0, std::abs(before.values[i]));
    result.max_invariant_drift = std::max(result.max_invariant_drift, std::abs(after.values[i] - before.values[i]) / scale);
  }
  result.accuracy_warning = result.max_invariant_drift > warn_drift;
  return result;
}

// Monodromy -------------------------------------------------------------------

namespace {

double distance_to_segment(Complex p, Complex z0, Complex z1) {
  const Complex d = z1 - z0;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - z0);
  const double tau = std::clamp(((p - z0) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (z0 + tau * d));
}

ComplexMatrix transport(const RationalMatrix& a, Complex z0, Complex z1, double tol) {
  const Complex dz = z1 - z0;
  const MatrixField field = [&](double tau, const ComplexMatrix& y) {
    return ComplexMatrix(a(z0 + tau * dz) * dz * y);
  };
  const auto sz = static_cast<Eigen::Index>(a.n());
  AdaptiveOptions opts;
  opts.tol = tol;
  opts.initial_step = 0.05;
  return integrate_adaptive(field, ComplexMatrix::Identity(sz, sz), 0.0, 1.0, opts);
}

double min_pole_gap(const std::vector<Pole>& poles) {
  double gap = INFINITY;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) gap = std::min(gap, std::abs(poles[i].position - poles[j].position));
  }
  return std::isfinite(gap) ? gap : 1.0;
}

// Smallest distance from a pole to another pole's approach segment, in units of the loop radius.
double loop_clearance(const std::vector<Pole>& poles, Complex base, double radius) {
  double worst = INFINITY;
  for (std::size_t t = 0; t < poles.size(); ++t) {
    const Complex center = poles[t].position;
    if (std::abs(center - base) < 2.0 * radius) return 0.0;
    const Complex entry = center - radius * (center - base) / std::abs(center - base);
    for (std::size_t s = 0; s < poles.size(); ++s) {
      if (s != t) worst = std::min(worst, distance_to_segment(poles[s].position, base, entry) / radius);
    }
  }
  return worst;
}

}  // namespace

MonodromyTuple monodromy(const RationalMatrix& a, const MonodromyOptions& options) {
  require_simple_poles(a, "monodromy");
  if (a.poly_degree() >= 0) {
    throw UnsupportedError("monodromy needs infinity to be at worst a simple pole; apply move_infinity first");
  }
  const auto& poles = a.poles();
  const std::size_t m = poles.size();
  MonodromyTuple out;
  if (m == 0) {
    out.base = options.base.value_or(Complex{});
    return out;
  }
  const double gap = min_pole_gap(poles);
  const double radius = gap / 4.0;

  Complex centroid{};
  double spread = 0.0;
  for (const auto& p : poles) centroid += p.position;
  centroid /= static_cast<double>(m);
  for (const auto& p : poles) spread = std::max(spread, std::abs(p.position - centroid));
  if (options.base) {
    out.base = *options.base;
  } else {
    // First candidate sits straight below the poles; others rotate around the
    // centroid until every approach segment clears the other poles.
    double best = -1.0;
    for (int c = 0; c < 24; ++c) {
      const double phi = -std::numbers::pi / 2 + (c % 2 == 0 ? 1 : -1) * ((c + 1) / 2) * std::numbers::pi / 12;
      const Complex candidate = centroid + (spread + gap) * std::polar(1.0, phi);
      const double clearance = loop_clearance(poles, candidate, radius);
      if (clearance > best) {
        best = clearance;
        out.base = candidate;
      }
      if (clearance >= 2.0) break;
    }
  }

  // Angles measured counterclockwise from the ray pointing from the poles to the base.
  Complex away = out.base - centroid;
  away = std::abs(away) > 0.0 ? away / std::abs(away) : Complex(0.0, -1.0);
  std::vector<double> angle(m);
  for (std::size_t t = 0; t < m; ++t) {
    double phi = std::arg((poles[t].position - out.base) / away);
    if (phi < 0) phi += 2.0 * std::numbers::pi;
    angle[t] = phi;
  }
  if (options.ordering.empty()) {
    out.order.resize(m);
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(), [&](auto i, auto j) { return angle[i] < angle[j]; });
  } else {
    out.order = options.ordering;
    std::vector<std::size_t> sorted = out.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != m || sorted[i] != i) throw DimensionError("ordering is not a permutation of the poles");
    }
  }

  out.matrices.resize(m);
  for (std::size_t t = 0; t < m; ++t) {
    const Complex center = poles[t].position;
    const Complex toward = (center - out.base) / std::abs(center - out.base);
    const Complex entry = center - radius * toward;
    for (std::size_t s = 0; s < m; ++s) {
      const double clearance = distance_to_segment(poles[s].position, out.base, entry);
      if (s != t && clearance < radius) {
        throw GeometryError("loop to pole " + std::to_string(t) + " passes within " + std::to_string(clearance) +
                            " of pole " + std::to_string(s) + "; choose another base point");
      }
      if (std::abs(poles[s].position - out.base) < 2.0 * radius) {
        throw GeometryError("base point is too close to pole " + std::to_string(s));
      }
    }
    const ComplexMatrix outward = transport(a, out.base, entry, options.tol);
    // Counterclockwise diamond with vertices center + (entry - center) i^q.
    ComplexMatrix around = ComplexMatrix::Identity(static_cast<Eigen::Index>(a.n()), static_cast<Eigen::Index>(a.n()));
    Complex vertex = entry;
    for (int q = 0; q < 4; ++q) {
      const Complex next = center + (vertex - center) * Complex(0.0, 1.0);
      around = transport(a, vertex, next, options.tol) * around;
      vertex = next;
    }
    out.matrices[t] = outward.inverse() * around * outward;
  }

  const auto sz = static_cast<Eigen::Index>(a.n());
  ComplexMatrix product = ComplexMatrix::Identity(sz, sz);
  for (auto t : out.order) product = out.matrices[t] * product;
  out.product_residual = max_abs(product - ComplexMatrix::Identity(sz, sz));
  return out;
}

double monodromy_class_mismatch(const RationalMatrix& a, const MonodromyTuple& m) {
  require_simple_poles(a, "monodromy_class_mismatch");
  if (m.matrices.size() != a.poles().size()) throw DimensionError("monodromy tuple does not match A");
  double worst = 0.0;
  for (std::size_t t = 0; t < a.poles().size(); ++t) {
    const Eigen::ComplexEigenSolver<ComplexMatrix> residue(a.poles()[t].parts[0]);
    const ComplexVector lambda = residue.eigenvalues();
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      for (Eigen::Index j = 0; j < lambda.size(); ++j) {
        const Complex diff = lambda(i) - lambda(j);
        const double nearest = std::round(diff.real());
        if (i != j && nearest != 0.0 && std::abs(diff - nearest) < 1e-8) {
          throw PreconditionError("residue eigenvalues at pole " + std::to_string(t) +
                                  " differ by a nonzero integer (resonant)");
        }
      }
    }
    const Eigen::ComplexEigenSolver<ComplexMatrix> mono(m.matrices[t]);
    const ComplexVector mu = mono.eigenvalues();
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(mu.size()));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    double best = INFINITY;
    do {
      double err = 0.0;
      for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        const Complex expected = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * lambda(i));
        err = std::max(err, std::abs(mu(perm[static_cast<std::size_t>(i)]) - expected));
      }
      best = std::min(best, err);
    } while (std::next_permutation(perm.begin(), perm.end()));
    worst = std::max(worst, best);
  }
  return worst;
}

// Isomonodromy ----------------------------------------------------------------

RationalMatrix schlesinger_flow(const RationalMatrix& a, std::size_t moving, const std::vector<Complex>& path,
                                const SchlesingerOptions& options) {
  require_simple_poles(a, "schlesinger_flow");
  if (a.poly_degree() >= 0) throw UnsupportedError("schlesinger_flow needs a Fuchsian system without polynomial part");
  if (moving >= a.poles().size()) throw DimensionError("moving pole index out of range");
  const auto sz = static_cast<Eigen::Index>(a.n());
  const std::size_t m = a.poles().size();
  RationalMatrix current = a;
  for (const Complex target : path) {
    const Complex start = current.poles()[moving].position;
    const Complex dz = target - start;
    if (dz == Complex{}) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == moving) continue;
      const double clearance = distance_to_segment(current.poles()[i].position, start, target);
      if (clearance < options.min_separation) {
        throw GeometryError("moving pole passes within " + std::to_string(clearance) + " of pole " + std::to_string(i));
      }
    }
    const std::vector<Pole>& fixed = current.poles();
    const MatrixField field = [&](double tau, const ComplexMatrix& stacked) {
      const Complex aj = start + tau * dz;
      const auto block = [&](std::size_t t) { return stacked.middleCols(static_cast<Eigen::Index>(t) * sz, sz); };
      ComplexMatrix out = ComplexMatrix::Zero(stacked.rows(), stacked.cols());
      ComplexMatrix moving_rate = ComplexMatrix::Zero(sz, sz);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == moving) continue;
        const ComplexMatrix rate = commutator(block(i), block(moving)) * (dz / (fixed[i].position - aj));
        out.middleCols(static_cast<Eigen::Index>(i) * sz, sz) = rate;
        moving_rate -= rate;
      }
      out.middleCols(static_cast<Eigen::Index>(moving) * sz, sz) = moving_rate;
      return out;
    };
    AdaptiveOptions opts;
    opts.tol = options.tol;
    const ComplexMatrix end = integrate_adaptive(field, current.stacked_residues(), 0.0, 1.0, opts);
    current = current.with_residues(end).with_position(moving, target);
  }
  return current;
}

RationalMatrix move_infinity(const RationalMatrix& a, Complex c) {
  require_simple_poles(a, "move_infinity");
  if (a.poly_degree() >= 0) throw UnsupportedError("move_infinity needs a Fuchsian system without polynomial part");
  const auto sz = static_cast<Eigen::Index>(a.n());
  ComplexMatrix total = ComplexMatrix::Zero(sz, sz);
  std::vector<Pole> poles;
  double scale = 0.0;
  for (const auto& p : a.poles()) {
    if (p.position == c) throw GeometryError("move_infinity: c coincides with a pole");
    poles.push_back({1.0 / (p.position - c), {p.parts[0]}});
    total += p.parts[0];
    scale = std::max(scale, max_abs(p.parts[0]));
  }
  if (max_abs(total) > 1e-14 * std::max(scale, 1.0)) poles.push_back({Complex{}, {ComplexMatrix(-total)}});
  return RationalMatrix(a.n(), std::move(poles));
}

}  // namespace wildmoduli
