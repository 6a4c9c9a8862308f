#pragma once

// Complex matrices, truncated jets g_k = gl_n(C[z]/z^k), principal parts in
// the dual g_k^*, and the residue-trace pairing between them.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace wildmoduli {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Throws DimensionError unless `m` is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// Polynomial with complex coefficients in ascending degree. Trailing zeros
/// are trimmed on construction, so the zero polynomial has no coefficients.
class PolynomialC {
 public:
  PolynomialC() = default;
  explicit PolynomialC(std::vector<Complex> coeffs);

  static PolynomialC monomial(Complex c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex coeff(int power) const noexcept;
  Complex operator()(Complex z) const noexcept;

  friend PolynomialC operator+(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator-(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator*(const PolynomialC& a, const PolynomialC& b);
  friend bool operator==(const PolynomialC& a, const PolynomialC& b) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

/// X = sum_{j<k} X_j z^j  mod z^k, with n x n coefficients.
class Jet {
 public:
  Jet(std::size_t n, std::vector<ComplexMatrix> coeffs);

  static Jet zero(std::size_t n, std::size_t k);
  static Jet identity(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  /// Coefficient of z^j, 0 <= j < order().
  const ComplexMatrix& coefficient(std::size_t j) const { return coeffs_.at(j); }
  const std::vector<ComplexMatrix>& coeffs() const noexcept { return coeffs_; }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> coeffs_;
};

/// B = sum_{i=1..k} B_i dz/z^i.
class PrincipalPart {
 public:
  PrincipalPart(std::size_t n, std::vector<ComplexMatrix> coeffs);

  static PrincipalPart zero(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  /// Coefficient of dz/z^i, 1 <= i <= order().
  const ComplexMatrix& coefficient(std::size_t i) const { return coeffs_.at(i - 1); }
  const std::vector<ComplexMatrix>& coeffs() const noexcept { return coeffs_; }

  bool is_zero(double tol = 0.0) const;

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> coeffs_;
};

/// <X, B> = Res Tr(X B) = sum_i Tr(X_{i-1} B_i), pairing matching powers only.
Complex residue_pairing(const Jet& x, const PrincipalPart& b);

/// Principal part of the commutator [X, B] = XB - BX. Requires equal orders.
PrincipalPart coadjoint_action(const Jet& x, const PrincipalPart& b);

/// [X, Y] = XY - YX in g_k.
Jet jet_bracket(const Jet& x, const Jet& y);

/// Product in the truncated ring gl_n(C[z]/z^k).
Jet jet_product(const Jet& x, const Jet& y);

/// Group inverse of a jet with invertible constant term.
Jet jet_inverse(const Jet& g);

/// exp(X) in G_k, computed on the block Toeplitz representation.
Jet jet_exp(const Jet& x);

/// Coadjoint action of a group jet: principal part of g B g^{-1}.
PrincipalPart group_coadjoint_action(const Jet& g, const PrincipalPart& b);

Jet direct_sum(const Jet& a, const Jet& b);
PrincipalPart direct_sum(const PrincipalPart& a, const PrincipalPart& b);

/// Block lower-triangular Toeplitz matrix of size kn representing X acting on
/// C^n[z]/z^k by multiplication.
ComplexMatrix toeplitz_matrix(const Jet& x);

}  // namespace wildmoduli
