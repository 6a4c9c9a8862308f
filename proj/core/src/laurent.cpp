#include "wildmoduli/laurent.hpp"

#include <algorithm>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

MatrixLaurent::MatrixLaurent(std::size_t n, int low, int high) : n_(n), low_(low) {
  const auto sz = static_cast<Eigen::Index>(n);
  const int count = std::max(0, high - low + 1);
  c_.assign(static_cast<std::size_t>(count), ComplexMatrix::Zero(sz, sz));
}

ComplexMatrix MatrixLaurent::coefficient(int power) const {
  if (power < low_ || power > high()) {
    const auto sz = static_cast<Eigen::Index>(n_);
    return ComplexMatrix::Zero(sz, sz);
  }
  return c_[static_cast<std::size_t>(power - low_)];
}

ComplexMatrix& MatrixLaurent::at(int power) {
  if (power < low_ || power > high()) throw DimensionError("Laurent power out of range");
  return c_[static_cast<std::size_t>(power - low_)];
}

MatrixLaurent MatrixLaurent::multiply(const MatrixLaurent& other, int max_power) const {
  if (n_ != other.n_) throw DimensionError("Laurent series size mismatch");
  const int low = low_ + other.low_;
  const int top = std::min(max_power, high() + other.high());
  MatrixLaurent out(n_, low, top);
  for (int p = low_; p <= this->high(); ++p) {
    const ComplexMatrix& a = c_[static_cast<std::size_t>(p - low_)];
    for (int q = other.low_; q <= other.high() && p + q <= top; ++q) {
      out.at(p + q).noalias() += a * other.c_[static_cast<std::size_t>(q - other.low_)];
    }
  }
  return out;
}

std::vector<Complex> MatrixLaurent::trace() const {
  std::vector<Complex> out;
  out.reserve(c_.size());
  for (const auto& m : c_) out.push_back(m.trace());
  return out;
}

double binomial(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace wildmoduli
