#pragma once

#include <random>

#include "wildmoduli/jetcore.hpp"

namespace wildmoduli::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(normal(rng), normal(rng));
  return m;
}

inline ComplexMatrix random_traceless(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  ComplexMatrix m = random_matrix(rng, n, scale);
  const Complex shift = m.trace() / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) -= shift;
  return m;
}

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  const double re = normal(rng);
  return {re, normal(rng)};
}

inline Jet random_jet(std::mt19937_64& rng, std::size_t n, std::size_t k, double scale = 1.0) {
  std::vector<ComplexMatrix> c;
  for (std::size_t j = 0; j < k; ++j) c.push_back(random_matrix(rng, static_cast<Eigen::Index>(n), scale));
  return Jet(n, std::move(c));
}

inline PrincipalPart random_principal_part(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<ComplexMatrix> c;
  for (std::size_t i = 0; i < k; ++i) c.push_back(random_matrix(rng, static_cast<Eigen::Index>(n)));
  return PrincipalPart(n, std::move(c));
}

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace wildmoduli::testing
