#pragma once

#include <cmath>
#include <random>

#include "umeb/quantum_states.hpp"

namespace umeb::testing {

inline ComplexMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

/// Haar unitary: QR of a Ginibre matrix with the R-diagonal phases removed.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  const ComplexMatrix z = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline BipartiteState random_state(int d, int dprime, std::mt19937_64& rng) {
  return BipartiteState::normalized(d, dprime, random_gaussian(d * dprime, 1, rng).col(0));
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_gaussian(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix random_density(int n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_gaussian(n, n, rng);
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline std::vector<double> random_simplex(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> l(static_cast<std::size_t>(n));
  double s = 0.0;
  for (auto& x : l) s += (x = u(rng));
  for (auto& x : l) x /= s;
  return l;
}

inline ComplexVector basis_vector(int n, int k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1.0;
  return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace umeb::testing
