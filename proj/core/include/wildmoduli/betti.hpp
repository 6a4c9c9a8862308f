#pragma once

// Multiplicative side: SL2 relation tuples on the four-punctured sphere and
// their cubic surface, fibres of the r = 3 fission space and the
// corresponding cubic surface, and Betti dimension bookkeeping.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wildmoduli/irregular.hpp"

namespace wildmoduli {

struct BettiTolerances {
  double constraint = 1e-9;  ///< relation / class membership
  double fit = 1e-7;         ///< cubic residual on validation samples
  int max_retries = 64;
};

/// Regular semisimple SL2 conjugacy class, identified by its trace.
class ConjClassSL2 {
 public:
  explicit ConjClassSL2(Complex trace);

  Complex trace() const noexcept { return trace_; }
  bool regular_semisimple() const noexcept { return regular_; }
  /// Eigenvalue mu with mu + 1/mu = trace.
  Complex eigenvalue() const noexcept;

 private:
  Complex trace_;
  bool regular_;
};

/// M_1 ... M_m in SL2 with M_1 M_2 ... M_m = 1.
class RelationTuple {
 public:
  explicit RelationTuple(std::vector<ComplexMatrix> matrices, double det_tol = 1e-10,
                         double product_tol = 1e-8);

  const std::vector<ComplexMatrix>& matrices() const noexcept { return m_; }
  const ComplexMatrix& operator[](std::size_t i) const { return m_.at(i); }
  std::size_t size() const noexcept { return m_.size(); }
  double product_residual() const;

 private:
  std::vector<ComplexMatrix> m_;
};

/// Point (s_1..s_2r, q) of the fibre S_2r ... S_1 = diag(q0, 1/q0), with
/// S_odd = [[1,s],[0,1]] and S_even = [[1,0],[s,1]].
struct StokesFiberPoint {
  int r = 0;
  std::vector<Complex> s;
  Complex q0{1.0, 0.0};

  ComplexMatrix product() const;
  double relation_residual() const;
};

using TracePoint = std::array<Complex, 3>;

/// Constants of a fitted cubic and its residuals. For the four-holed sphere
/// the coefficients are (a, b, c, d) of
///   xyz + x^2 + y^2 + z^2 + ax + by + cz = d;
/// for the fission fibre there is one coefficient d of xyz + x + y + z = d.
/// Residuals are |F| divided by max(1, largest monomial magnitude).
struct CubicFit {
  std::vector<Complex> coefficients;
  double fit_residual = 0.0;
  double validation_residual = 0.0;
  std::size_t fit_samples = 0;
  std::size_t validation_samples = 0;
};

/// (2g) dim G + sum classDims - 2 (dim G - dim Z).
ModuliDimension tame_cv_dim(int genus, const std::vector<int>& class_dims, const GroupSpec& group);

/// Full fission at each pole with r_i Stokes pairs:
/// dim C_i = dim G + r_i (dim G - dim T) + dim T - 2 dim T, then
/// (2g) dim G + sum dim C_i - 2 (dim G - dim Z).
ModuliDimension wild_cv_dim(int genus, const std::vector<int>& stokes_pairs, const GroupSpec& group);

/// Derives an independent stream seed; used for batch sampling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

RelationTuple sample_fkv_tuple(const std::array<Complex, 4>& traces, std::uint64_t seed,
                               const BettiTolerances& tol = {});

/// x = tr(M1 M2), y = tr(M2 M3), z = tr(M1 M3).
TracePoint fkv_coords(const RelationTuple& t);

/// Least squares for (a, b, c, d); residual measured on `validation` when
/// given, else on `samples`. Throws UnderdeterminedError or FitError.
CubicFit fit_fkv(std::span<const TracePoint> samples, std::span<const TracePoint> validation = {},
                 const BettiTolerances& tol = {});

StokesFiberPoint sample_fission_fiber(int r, Complex q0, std::uint64_t seed,
                                      const BettiTolerances& tol = {});

/// s_odd -> t^2 s_odd, s_even -> t^-2 s_even (conjugation by diag(t, 1/t)).
StokesFiberPoint torus_act(const StokesFiberPoint& pt, Complex t);

/// r = 3 only. With w = sqrt(q0) on the principal branch,
///   x = -i w (1 + s1 s2),  y = -i w (1 + s3 s4),  z = -i w (1 + s5 s6).
/// These satisfy xyz + x + y + z = d on the fibre over q0.
TracePoint fn_invariants(const StokesFiberPoint& pt);

/// Fits d from samples of one fibre. Needs at least 5 distinct samples.
CubicFit fit_fn(std::span<const TracePoint> samples, Complex q0,
                std::span<const TracePoint> validation = {}, const BettiTolerances& tol = {});

/// End-to-end surface experiments: draw fit and validation samples from
/// disjoint seed streams and fit.
struct SurfaceRun {
  CubicFit fit;
  std::vector<TracePoint> samples;
  double max_constraint_residual = 0.0;
};

SurfaceRun run_fkv(const std::array<Complex, 4>& traces, std::size_t samples, std::uint64_t seed,
                   std::size_t validation = 24, const BettiTolerances& tol = {});

SurfaceRun run_fn(Complex q0, std::size_t samples, std::uint64_t seed, std::size_t validation = 24,
                  const BettiTolerances& tol = {});

}  // namespace wildmoduli
