#include "wildmoduli/betti.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

namespace {

Complex standard_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix upper(Complex s) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = s;
  return m;
}

ComplexMatrix lower(Complex s) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 0) = s;
  return m;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double scaled(Complex value, std::initializer_list<Complex> terms) {
  double scale = 1.0;
  for (auto t : terms) scale = std::max(scale, std::abs(t));
  return std::abs(value) / scale;
}

}  // namespace

// Classes and tuples ----------------------------------------------------------

ConjClassSL2::ConjClassSL2(Complex trace)
    : trace_(trace), regular_(std::abs(trace - 2.0) > 0.0 && std::abs(trace + 2.0) > 0.0) {}

Complex ConjClassSL2::eigenvalue() const noexcept {
  return (trace_ + std::sqrt(trace_ * trace_ - 4.0)) / 2.0;
}

RelationTuple::RelationTuple(std::vector<ComplexMatrix> matrices, double det_tol, double product_tol)
    : m_(std::move(matrices)) {
  if (m_.empty()) throw DimensionError("relation tuple is empty");
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i].rows() != 2 || m_[i].cols() != 2) throw DimensionError("relation tuple entries must be 2x2");
    if (std::abs(m_[i].determinant() - 1.0) > det_tol) {
      throw PreconditionError("matrix " + std::to_string(i) + " is not in SL2");
    }
  }
  if (product_residual() > product_tol) {
    throw PreconditionError("product of the tuple is not the identity");
  }
}

double RelationTuple::product_residual() const {
  ComplexMatrix p = ComplexMatrix::Identity(2, 2);
  for (const auto& m : m_) p = p * m;
  return max_abs(p - ComplexMatrix::Identity(2, 2));
}

ComplexMatrix StokesFiberPoint::product() const {
  ComplexMatrix p = ComplexMatrix::Identity(2, 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // s[0] is s_1 (odd, upper triangular).
    p = (i % 2 == 0 ? upper(s[i]) : lower(s[i])) * p;
  }
  return p;
}

double StokesFiberPoint::relation_residual() const {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = q0;
  d(1, 1) = 1.0 / q0;
  return max_abs(product() - d);
}

// Dimensions ------------------------------------------------------------------

ModuliDimension tame_cv_dim(int genus, const std::vector<int>& class_dims, const GroupSpec& group) {
  if (genus < 0) throw DimensionError("genus must be nonnegative");
  ModuliDimension out;
  out.value = 2 * genus * group.dim;
  for (int c : class_dims) {
    if (c < 0) throw DimensionError("class dimensions must be nonnegative");
    out.orbit_dims.push_back(c);
    out.value += c;
  }
  out.value -= 2 * (group.dim - group.center_dim);
  return out;
}

ModuliDimension wild_cv_dim(int genus, const std::vector<int>& stokes_pairs, const GroupSpec& group) {
  if (genus < 0) throw DimensionError("genus must be nonnegative");
  ModuliDimension out;
  out.value = 2 * genus * group.dim;
  for (int r : stokes_pairs) {
    if (r < 1) throw DimensionError("each pole needs r >= 1");
    const int fission_space = group.dim + r * (group.dim - group.torus_dim) + group.torus_dim;
    const int reduced = fission_space - 2 * group.torus_dim;
    out.orbit_dims.push_back(reduced);
    out.value += reduced;
  }
  out.value -= 2 * (group.dim - group.center_dim);
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Four-punctured sphere -------------------------------------------------------

namespace {

ComplexMatrix random_in_class(const ConjClassSL2& cls, std::mt19937_64& rng) {
  const Complex mu = cls.eigenvalue();
  const ComplexMatrix g = upper(standard_normal(rng)) * lower(standard_normal(rng));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = mu;
  d(1, 1) = 1.0 / mu;
  return g * d * g.inverse();
}

}  // namespace

RelationTuple sample_fkv_tuple(const std::array<Complex, 4>& traces, std::uint64_t seed,
                               const BettiTolerances& tol) {
  std::vector<ConjClassSL2> classes;
  for (std::size_t i = 0; i < 4; ++i) {
    classes.emplace_back(traces[i]);
    if (!classes.back().regular_semisimple()) {
      throw PreconditionError("trace " + std::to_string(i + 1) + " is +-2: class is not regular semisimple");
    }
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  double best = INFINITY;
  for (int attempt = 0; attempt < tol.max_retries; ++attempt) {
    const ComplexMatrix m1 = random_in_class(classes[0], rng);
    const ComplexMatrix m2 = random_in_class(classes[1], rng);
    const ComplexMatrix p = (m1 * m2).inverse();
    // M3 = [[a, b], [c, d]] with a + d = p3, ad - bc = 1 and tr(M3^{-1} P) = p4.
    // Choosing a leaves the linear equation -b P21 - c P12 = rhs and the
    // quadratic bc = ad - 1.
    const Complex a = standard_normal(rng);
    const Complex d = traces[2] - a;
    const Complex rhs = traces[3] - d * p(0, 0) - a * p(1, 1);
    const Complex prod = a * d - 1.0;
    const bool root_choice = coin(rng);
    if (std::abs(p(0, 1)) < 1e-8 || std::abs(p(1, 0)) < 1e-8) continue;
    // P21 b^2 + rhs b + prod P12 = 0
    const Complex disc = std::sqrt(rhs * rhs - 4.0 * p(1, 0) * prod * p(0, 1));
    const Complex b = (-rhs + (root_choice ? disc : -disc)) / (2.0 * p(1, 0));
    const Complex c = -(rhs + b * p(1, 0)) / p(0, 1);
    ComplexMatrix m3(2, 2);
    m3 << a, b, c, d;
    const ComplexMatrix m4 = m3.inverse() * p;
    std::vector<ComplexMatrix> ms{m1, m2, m3, m4};

    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(ms[i].trace() - traces[i]) / std::max(1.0, std::abs(traces[i])));
      worst = std::max(worst, std::abs(ms[i].determinant() - 1.0));
    }
    ComplexMatrix prod_all = m1 * m2 * m3 * m4;
    worst = std::max(worst, max_abs(prod_all - ComplexMatrix::Identity(2, 2)));
    best = std::min(best, worst);
    if (worst <= tol.constraint) {
      return RelationTuple(std::move(ms), tol.constraint, tol.constraint);
    }
  }
  throw SamplingError("sample_fkv_tuple: no tuple within tolerance after " +
                      std::to_string(tol.max_retries) + " attempts (best residual " +
                      std::to_string(best) + ")");
}

TracePoint fkv_coords(const RelationTuple& t) {
  if (t.size() != 4) throw DimensionError("fkv_coords needs a 4-tuple");
  return {(t[0] * t[1]).trace(), (t[1] * t[2]).trace(), (t[0] * t[2]).trace()};
}

namespace {

std::size_t distinct_count(std::span<const TracePoint> samples) {
  std::vector<TracePoint> seen;
  for (const auto& s : samples) {
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const TracePoint& o) {
      double diff = 0.0;
      double scale = 1.0;
      for (std::size_t i = 0; i < 3; ++i) {
        diff = std::max(diff, std::abs(s[i] - o[i]));
        scale = std::max(scale, std::abs(s[i]));
      }
      return diff <= 1e-12 * scale;
    });
    if (!dup) seen.push_back(s);
  }
  return seen.size();
}

double fkv_residual(const TracePoint& p, const std::vector<Complex>& k) {
  const auto [x, y, z] = p;
  const Complex f = x * y * z + x * x + y * y + z * z + k[0] * x + k[1] * y + k[2] * z - k[3];
  return scaled(f, {x * y * z, x * x, y * y, z * z, k[0] * x, k[1] * y, k[2] * z, k[3]});
}

double fn_residual(const TracePoint& p, Complex d) {
  const auto [x, y, z] = p;
  const Complex f = x * y * z + x + y + z - d;
  return scaled(f, {x * y * z, x, y, z, d});
}

}  // namespace

CubicFit fit_fkv(std::span<const TracePoint> samples, std::span<const TracePoint> validation,
                 const BettiTolerances& tol) {
  if (distinct_count(samples) < 8) {
    throw UnderdeterminedError("fit_fkv needs at least 8 distinct samples, got " +
                               std::to_string(distinct_count(samples)));
  }
  const auto rows = static_cast<Eigen::Index>(samples.size());
  ComplexMatrix lhs(rows, 4);
  ComplexVector rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto [x, y, z] = samples[static_cast<std::size_t>(i)];
    // Row scaling keeps large samples from dominating.
    const double w = 1.0 / std::max({1.0, std::abs(x * y * z), std::norm(x), std::norm(y), std::norm(z)});
    lhs.row(i) << w * x, w * y, w * z, -w;
    rhs(i) = -w * (x * y * z + x * x + y * y + z * z);
  }
  const Eigen::JacobiSVD<ComplexMatrix> svd(lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(3) <= 1e-10 * sv(0)) {
    throw UnderdeterminedError("fit_fkv: samples do not determine (a, b, c, d)");
  }
  const ComplexVector k = svd.solve(rhs);
  CubicFit fit;
  fit.coefficients = {k(0), k(1), k(2), k(3)};
  fit.fit_samples = samples.size();
  for (const auto& s : samples) fit.fit_residual = std::max(fit.fit_residual, fkv_residual(s, fit.coefficients));
  const auto& check = validation.empty() ? samples : validation;
  fit.validation_samples = validation.size();
  for (const auto& s : check) {
    fit.validation_residual = std::max(fit.validation_residual, fkv_residual(s, fit.coefficients));
  }
  if (fit.validation_residual > tol.fit) {
    throw FitError("fit_fkv: residual " + std::to_string(fit.validation_residual) +
                   " exceeds tolerance " + std::to_string(tol.fit));
  }
  return fit;
}

// Fission fibre ---------------------------------------------------------------

StokesFiberPoint sample_fission_fiber(int r, Complex q0, std::uint64_t seed,
                                      const BettiTolerances& tol) {
  if (r < 1) throw PreconditionError("fission fibre needs r >= 1");
  if (q0 == Complex{}) throw PreconditionError("fission fibre needs q0 != 0");
  StokesFiberPoint pt{r, std::vector<Complex>(static_cast<std::size_t>(2 * r)), q0};
  if (r == 1) {
    // S2 S1 = [[1, s1], [s2, 1 + s1 s2]] is diagonal only for s1 = s2 = 0.
    if (std::abs(q0 - 1.0) > tol.constraint) {
      throw SamplingError("r = 1 fibre over q0 != 1 is empty");
    }
    return pt;
  }
  ComplexMatrix target = ComplexMatrix::Zero(2, 2);
  target(0, 0) = q0;
  target(1, 1) = 1.0 / q0;
  std::mt19937_64 rng(seed);
  const std::size_t free = static_cast<std::size_t>(2 * r - 3);
  for (int attempt = 0; attempt < tol.max_retries; ++attempt) {
    for (std::size_t i = 0; i < free; ++i) pt.s[i] = standard_normal(rng);
    StokesFiberPoint head{r, std::vector<Complex>(pt.s.begin(), pt.s.begin() + static_cast<std::ptrdiff_t>(free)), q0};
    // Remaining L(c) U(b) L(a) = T = D P^{-1} = [[1 + ab, b], [c(1 + ab) + a, 1 + bc]].
    const ComplexMatrix t = target * head.product().inverse();
    const Complex b = t(0, 1);
    if (std::abs(b) < 1e-6) continue;
    pt.s[free] = (t(0, 0) - 1.0) / b;
    pt.s[free + 1] = b;
    pt.s[free + 2] = (t(1, 1) - 1.0) / b;
    if (pt.relation_residual() <= tol.constraint) return pt;
  }
  throw SamplingError("sample_fission_fiber: no fibre point within tolerance after " +
                      std::to_string(tol.max_retries) + " attempts");
}

StokesFiberPoint torus_act(const StokesFiberPoint& pt, Complex t) {
  StokesFiberPoint out = pt;
  const Complex t2 = t * t;
  for (std::size_t i = 0; i < out.s.size(); ++i) {
    out.s[i] = (i % 2 == 0) ? out.s[i] * t2 : out.s[i] / t2;
  }
  return out;
}

TracePoint fn_invariants(const StokesFiberPoint& pt) {
  if (pt.r != 3 || pt.s.size() != 6) throw UnsupportedError("fn_invariants is defined for r = 3 only");
  const Complex scale = Complex(0.0, -1.0) * std::sqrt(pt.q0);
  return {scale * (1.0 + pt.s[0] * pt.s[1]), scale * (1.0 + pt.s[2] * pt.s[3]),
          scale * (1.0 + pt.s[4] * pt.s[5])};
}

CubicFit fit_fn(std::span<const TracePoint> samples, Complex q0, std::span<const TracePoint> validation,
                const BettiTolerances& tol) {
  (void)q0;
  if (distinct_count(samples) < 5) {
    throw UnderdeterminedError("fit_fn needs at least 5 distinct samples, got " +
                               std::to_string(distinct_count(samples)));
  }
  Complex sum{};
  for (const auto& [x, y, z] : samples) sum += x * y * z + x + y + z;
  const Complex d = sum / static_cast<double>(samples.size());
  CubicFit fit;
  fit.coefficients = {d};
  fit.fit_samples = samples.size();
  for (const auto& s : samples) fit.fit_residual = std::max(fit.fit_residual, fn_residual(s, d));
  const auto& check = validation.empty() ? samples : validation;
  fit.validation_samples = validation.size();
  for (const auto& s : check) fit.validation_residual = std::max(fit.validation_residual, fn_residual(s, d));
  if (fit.validation_residual > tol.fit) {
    throw FitError("fit_fn: residual " + std::to_string(fit.validation_residual) +
                   " exceeds tolerance " + std::to_string(tol.fit) +
                   " (coordinate choice does not satisfy the cubic)");
  }
  return fit;
}

// Experiments -----------------------------------------------------------------

SurfaceRun run_fkv(const std::array<Complex, 4>& traces, std::size_t samples, std::uint64_t seed,
                   std::size_t validation, const BettiTolerances& tol) {
  SurfaceRun run;
  std::vector<TracePoint> held_out;
  for (std::size_t i = 0; i < samples + validation; ++i) {
    const RelationTuple t = sample_fkv_tuple(traces, derive_seed(seed, i), tol);
    run.max_constraint_residual = std::max(run.max_constraint_residual, t.product_residual());
    (i < samples ? run.samples : held_out).push_back(fkv_coords(t));
  }
  run.fit = fit_fkv(run.samples, held_out, tol);
  return run;
}

SurfaceRun run_fn(Complex q0, std::size_t samples, std::uint64_t seed, std::size_t validation,
                  const BettiTolerances& tol) {
  SurfaceRun run;
  std::vector<TracePoint> held_out;
  for (std::size_t i = 0; i < samples + validation; ++i) {
    const StokesFiberPoint pt = sample_fission_fiber(3, q0, derive_seed(seed, i), tol);
    run.max_constraint_residual = std::max(run.max_constraint_residual, pt.relation_residual());
    (i < samples ? run.samples : held_out).push_back(fn_invariants(pt));
  }
  run.fit = fit_fn(run.samples, q0, held_out, tol);
  return run;
}

}  // namespace wildmoduli
