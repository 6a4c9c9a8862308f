#pragma once

// Rational matrices A(z), their spectral invariants, the Lie-Poisson
// structure on simple-pole residues, isospectral flows, monodromy of
// d - A dz, and Schlesinger isomonodromic transport.

#include <functional>
#include <optional>
#include <vector>

#include "wildmoduli/ode.hpp"

namespace wildmoduli {

struct Pole {
  Complex position;
  std::vector<ComplexMatrix> parts;  ///< A_{t,1..k}: coefficients of (z - a)^{-i}
};

/// A(z) = sum_t sum_i A_{t,i} (z - a_t)^{-i} + sum_j P_j z^j.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t n, std::vector<Pole> poles, std::vector<ComplexMatrix> poly = {});

  /// sum_t residues[t] / (z - positions[t]).
  static RationalMatrix fuchsian(const std::vector<Complex>& positions,
                                 const std::vector<ComplexMatrix>& residues);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Pole>& poles() const noexcept { return poles_; }
  const std::vector<ComplexMatrix>& poly() const noexcept { return poly_; }
  /// -1 when there is no polynomial part.
  int poly_degree() const noexcept { return static_cast<int>(poly_.size()) - 1; }
  bool simple_poles() const noexcept;

  ComplexMatrix operator()(Complex z) const;
  /// Residues A_{t,1} stacked side by side into an n x (m n) matrix.
  ComplexMatrix stacked_residues() const;
  RationalMatrix with_residues(const ComplexMatrix& stacked) const;
  RationalMatrix with_position(std::size_t pole, Complex position) const;

 private:
  std::size_t n_;
  std::vector<Pole> poles_;
  std::vector<ComplexMatrix> poly_;
};

/// Identifies one coefficient of tr(A^p)/p: at pole `pole` the coefficient of
/// (z - a)^{-order}; pole == -1 denotes the polynomial part, order = degree.
struct InvariantLabel {
  int power = 1;
  int pole = 0;
  int order = 1;
};

/// Partial-fraction coefficients of tr(A(z)^p)/p for p = 1..n, ordered by
/// p, then pole, then order, then polynomial degree.
struct SpectralInvariants {
  std::vector<Complex> values;
  std::vector<InvariantLabel> labels;
};

SpectralInvariants spectral_invariants(const RationalMatrix& a);

/// Partial fractions of tr(A^p)/p for one p: [pole][order-1] then polynomial.
struct ScalarPartialFractions {
  std::vector<std::vector<Complex>> poles;
  std::vector<Complex> poly;
};
ScalarPartialFractions trace_power(const RationalMatrix& a, int p);

using ScalarFunction = std::function<Complex(const RationalMatrix&)>;

/// The invariant with index `index` in spectral_invariants ordering.
ScalarFunction invariant_function(const RationalMatrix& shape, std::size_t index);

/// Gradient with respect to each simple-pole residue, as matrices G_t with
/// df = sum_t Tr(G_t dA_t). Central differences with step h.
std::vector<ComplexMatrix> residue_gradient(const RationalMatrix& a, const ScalarFunction& f, double h);

/// {f, g}(A) = sum_t Tr(A_t [grad_t f, grad_t g]). Simple poles only; a
/// polynomial part must be constant and is held fixed.
Complex lie_poisson_bracket(const RationalMatrix& a, const ScalarFunction& f, const ScalarFunction& g,
                            double h = 1e-5);
Complex lie_poisson_bracket(const RationalMatrix& a, std::size_t f, std::size_t g, double h = 1e-5);

/// All pairwise brackets of the spectral invariants (antisymmetric matrix).
ComplexMatrix invariant_brackets(const RationalMatrix& a, double h = 1e-5);

struct FlowResult {
  RationalMatrix matrix;
  double max_invariant_drift = 0.0;
  /// Drift exceeded `warn_drift`; rerun with more steps.
  bool accuracy_warning = false;
};

/// Hamiltonian flow dA_t/ds = [grad_t H, A_t] integrated with fixed-step RK4.
FlowResult isospectral_flow(const RationalMatrix& a, std::size_t hamiltonian, double duration, long steps,
                            double h = 1e-5, double warn_drift = 1e-6);

struct MonodromyOptions {
  /// Transport error grows with |M|, which reaches 1e3 for moderate residues.
  double tol = 1e-12;
  std::optional<Complex> base;
  /// Loop composition order; empty selects the counterclockwise angular order
  /// seen from the base point.
  std::vector<std::size_t> ordering;
};

/// Monodromy of dY/dz = A(z) Y around each pole, as transport matrices at the
/// base point. `matrices` are indexed like A.poles(); `product_residual` is
/// |M_{o_m} ... M_{o_1} - 1|_max for the composition order o, which vanishes
/// when infinity is not a pole.
struct MonodromyTuple {
  Complex base;
  std::vector<std::size_t> order;
  std::vector<ComplexMatrix> matrices;
  double product_residual = 0.0;
};

MonodromyTuple monodromy(const RationalMatrix& a, const MonodromyOptions& options = {});

/// Largest mismatch between eig(M_t) and exp(2 pi i eig(A_t)) over poles,
/// after optimal matching. Throws PreconditionError when residue eigenvalues
/// differ by a nonzero integer.
double monodromy_class_mismatch(const RationalMatrix& a, const MonodromyTuple& m);

struct SchlesingerOptions {
  double tol = 1e-11;
  double min_separation = 1e-3;
};

/// Moves pole `moving` through the points of `path` (starting from its current
/// position) while integrating
///   dA_i/da_j = [A_i, A_j] / (a_i - a_j),  dA_j = -sum_{i != j} dA_i.
RationalMatrix schlesinger_flow(const RationalMatrix& a, std::size_t moving, const std::vector<Complex>& path,
                                const SchlesingerOptions& options = {});

/// Moebius change w = 1/(z - c) sending z = c to infinity. Residues are
/// preserved; a nonzero residue at infinity becomes a pole at w = 0.
RationalMatrix move_infinity(const RationalMatrix& a, Complex c);

}  // namespace wildmoduli
