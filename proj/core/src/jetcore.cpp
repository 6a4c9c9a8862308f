#include "wildmoduli/jetcore.hpp"

#include <algorithm>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  if (!m.allFinite()) {
    throw DimensionError(std::string(what) + ": matrix has non-finite entries");
  }
}

// PolynomialC ---------------------------------------------------------------

PolynomialC::PolynomialC(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialC PolynomialC::monomial(Complex c, int degree) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1, Complex{});
  coeffs.back() = c;
  return PolynomialC(std::move(coeffs));
}

void PolynomialC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex PolynomialC::coeff(int power) const noexcept {
  if (power < 0 || power > degree()) return {};
  return coeffs_[static_cast<std::size_t>(power)];
}

Complex PolynomialC::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolynomialC operator+(const PolynomialC& a, const PolynomialC& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return PolynomialC(std::move(out));
}

PolynomialC operator-(const PolynomialC& a, const PolynomialC& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  }
  return PolynomialC(std::move(out));
}

PolynomialC operator*(const PolynomialC& a, const PolynomialC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolynomialC(std::move(out));
}

// Jet / PrincipalPart ---------------------------------------------------------

namespace {

void check_coefficients(std::size_t n, const std::vector<ComplexMatrix>& coeffs, const char* what) {
  if (coeffs.empty()) throw OrderError(std::string(what) + ": order must be at least 1");
  for (const auto& c : coeffs) {
    require_square_finite(c, what);
    if (static_cast<std::size_t>(c.rows()) != n) {
      throw DimensionError(std::string(what) + ": coefficient of size " + std::to_string(c.rows()) +
                           " in a rank " + std::to_string(n) + " object");
    }
  }
}

void require_same_n(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_same_order(std::size_t a, std::size_t b) {
  if (a != b) {
    throw OrderError("truncation order mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

Jet::Jet(std::size_t n, std::vector<ComplexMatrix> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_coefficients(n_, coeffs_, "Jet");
}

Jet Jet::zero(std::size_t n, std::size_t k) {
  const auto sz = static_cast<Eigen::Index>(n);
  return Jet(n, std::vector<ComplexMatrix>(k, ComplexMatrix::Zero(sz, sz)));
}

Jet Jet::identity(std::size_t n, std::size_t k) {
  const auto sz = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> coeffs(k, ComplexMatrix::Zero(sz, sz));
  coeffs[0] = ComplexMatrix::Identity(sz, sz);
  return Jet(n, std::move(coeffs));
}

PrincipalPart::PrincipalPart(std::size_t n, std::vector<ComplexMatrix> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_coefficients(n_, coeffs_, "PrincipalPart");
}

PrincipalPart PrincipalPart::zero(std::size_t n, std::size_t k) {
  const auto sz = static_cast<Eigen::Index>(n);
  return PrincipalPart(n, std::vector<ComplexMatrix>(k, ComplexMatrix::Zero(sz, sz)));
}

bool PrincipalPart::is_zero(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const ComplexMatrix& c) { return c.cwiseAbs().maxCoeff() <= tol; });
}

// Pairing and actions ---------------------------------------------------------

Complex residue_pairing(const Jet& x, const PrincipalPart& b) {
  require_same_n(x.n(), b.n());
  Complex acc{};
  const std::size_t top = std::min(b.order(), x.order());
  for (std::size_t i = 1; i <= top; ++i) {
    acc += (x.coefficient(i - 1) * b.coefficient(i)).trace();
  }
  return acc;
}

PrincipalPart coadjoint_action(const Jet& x, const PrincipalPart& b) {
  require_same_n(x.n(), b.n());
  require_same_order(x.order(), b.order());
  const std::size_t k = b.order();
  auto out = PrincipalPart::zero(b.n(), k).coeffs();
  // X_j z^j * B_i z^{-i} contributes to dz/z^{i-j} when i > j.
  for (std::size_t m = 1; m <= k; ++m) {
    for (std::size_t j = 0; j + m <= k; ++j) {
      const ComplexMatrix& xj = x.coefficient(j);
      const ComplexMatrix& bi = b.coefficient(m + j);
      out[m - 1] += xj * bi - bi * xj;
    }
  }
  return PrincipalPart(b.n(), std::move(out));
}

Jet jet_product(const Jet& x, const Jet& y) {
  require_same_n(x.n(), y.n());
  require_same_order(x.order(), y.order());
  const std::size_t k = x.order();
  auto out = Jet::zero(x.n(), k).coeffs();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; a + b < k; ++b) out[a + b] += x.coefficient(a) * y.coefficient(b);
  }
  return Jet(x.n(), std::move(out));
}

Jet jet_bracket(const Jet& x, const Jet& y) {
  auto xy = jet_product(x, y).coeffs();
  const auto yx = jet_product(y, x).coeffs();
  for (std::size_t j = 0; j < xy.size(); ++j) xy[j] -= yx[j];
  return Jet(x.n(), std::move(xy));
}

ComplexMatrix toeplitz_matrix(const Jet& x) {
  const auto n = static_cast<Eigen::Index>(x.n());
  const auto k = static_cast<Eigen::Index>(x.order());
  ComplexMatrix t = ComplexMatrix::Zero(n * k, n * k);
  for (Eigen::Index row = 0; row < k; ++row) {
    for (Eigen::Index col = 0; col <= row; ++col) {
      t.block(row * n, col * n, n, n) = x.coefficient(static_cast<std::size_t>(row - col));
    }
  }
  return t;
}

namespace {

Jet jet_from_toeplitz(const ComplexMatrix& t, std::size_t n, std::size_t k) {
  const auto sz = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    coeffs.emplace_back(t.block(static_cast<Eigen::Index>(j) * sz, 0, sz, sz));
  }
  return Jet(n, std::move(coeffs));
}

}  // namespace

Jet jet_inverse(const Jet& g) {
  const ComplexMatrix& g0 = g.coefficient(0);
  Eigen::PartialPivLU<ComplexMatrix> lu(g0);
  if (std::abs(lu.determinant()) == 0.0) {
    throw DimensionError("jet_inverse: constant term is singular");
  }
  const ComplexMatrix g0inv = lu.inverse();
  const std::size_t k = g.order();
  std::vector<ComplexMatrix> h(k);
  h[0] = g0inv;
  // sum_{a+b=m} g_a h_b = 0 for m >= 1.
  for (std::size_t m = 1; m < k; ++m) {
    ComplexMatrix acc = ComplexMatrix::Zero(g0.rows(), g0.cols());
    for (std::size_t a = 1; a <= m; ++a) acc += g.coefficient(a) * h[m - a];
    h[m] = -g0inv * acc;
  }
  return Jet(g.n(), std::move(h));
}

Jet jet_exp(const Jet& x) {
  const ComplexMatrix e = toeplitz_matrix(x).exp();
  return jet_from_toeplitz(e, x.n(), x.order());
}

PrincipalPart group_coadjoint_action(const Jet& g, const PrincipalPart& b) {
  require_same_n(g.n(), b.n());
  require_same_order(g.order(), b.order());
  const Jet h = jet_inverse(g);
  const std::size_t k = b.order();
  auto out = PrincipalPart::zero(b.n(), k).coeffs();
  // g_a z^a B_i z^{-i} h_c z^c lands on dz/z^m with m = i - a - c >= 1.
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t a = 0; a < i; ++a) {
      const ComplexMatrix left = g.coefficient(a) * b.coefficient(i);
      for (std::size_t c = 0; a + c < i; ++c) {
        out[i - a - c - 1] += left * h.coefficient(c);
      }
    }
  }
  return PrincipalPart(b.n(), std::move(out));
}

namespace {

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

Jet direct_sum(const Jet& a, const Jet& b) {
  require_same_order(a.order(), b.order());
  std::vector<ComplexMatrix> coeffs;
  for (std::size_t j = 0; j < a.order(); ++j) {
    coeffs.push_back(block_diag(a.coefficient(j), b.coefficient(j)));
  }
  return Jet(a.n() + b.n(), std::move(coeffs));
}

PrincipalPart direct_sum(const PrincipalPart& a, const PrincipalPart& b) {
  require_same_order(a.order(), b.order());
  std::vector<ComplexMatrix> coeffs;
  for (std::size_t i = 1; i <= a.order(); ++i) {
    coeffs.push_back(block_diag(a.coefficient(i), b.coefficient(i)));
  }
  return PrincipalPart(a.n() + b.n(), std::move(coeffs));
}

}  // namespace wildmoduli
