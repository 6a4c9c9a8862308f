#pragma once

#include <vector>

#include "wildmoduli/jetcore.hpp"

namespace wildmoduli {

/// Truncated matrix Laurent series sum_{p=low}^{high} C_p w^p.
class MatrixLaurent {
 public:
  MatrixLaurent(std::size_t n, int low, int high);

  std::size_t n() const noexcept { return n_; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(c_.size()) - 1; }

  /// Zero outside [low, high].
  ComplexMatrix coefficient(int power) const;
  ComplexMatrix& at(int power);

  /// Product truncated to powers <= max_power.
  MatrixLaurent multiply(const MatrixLaurent& other, int max_power) const;
  /// Trace of each coefficient, indexed from low().
  std::vector<Complex> trace() const;

 private:
  std::size_t n_;
  int low_;
  std::vector<ComplexMatrix> c_;
};

/// Binomial coefficient C(a, b) as a double; exact for the small arguments used here.
double binomial(int a, int b);

}  // namespace wildmoduli
