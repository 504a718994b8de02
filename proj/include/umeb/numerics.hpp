#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "umeb/errors.hpp"

namespace umeb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kKernel = 1e-10;        // orthonormality / reconstruction
inline constexpr double kHermitian = 1e-10;     // accepted anti-Hermitian part
inline constexpr double kPsd = 1e-9;            // accepted negative eigenvalue
inline constexpr double kEntropyClip = 1e-12;   // eigenvalues below count as zero
inline constexpr double kMaxEntangled = 1e-8;   // Schmidt coefficient deviation
inline constexpr double kSupportRank = 1e-10;   // marginal eigenvalue threshold
inline constexpr double kStateNorm = 1e-9;
}  // namespace tol

namespace numerics {

/// Thin singular value decomposition M = left * diag(singular_values) * right_dagger.
///
/// For an m x n input with k = min(m, n): left is m x k with orthonormal
/// columns, right_dagger is k x n with orthonormal rows, singular values are
/// sorted descending. The largest-magnitude component of every left singular
/// vector is made real and nonnegative (first index wins ties) with the
/// compensating phase moved into the matching row of right_dagger.
struct Svd {
  ComplexMatrix left;
  std::vector<double> singular_values;
  ComplexMatrix right_dagger;
};

Svd svd(const ComplexMatrix& m);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending and
/// eigenvectors stored as columns in the same order.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// The input is symmetrized before decomposing; an anti-Hermitian part larger
/// than hermitian_tol * max(1, max|m_ij|) is rejected.
HermitianEig hermitian_eig(const ComplexMatrix& m, double hermitian_tol = tol::kHermitian);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Which tensor factor gets summed out.
enum class Subsystem { A, B };

/// Partial trace of an operator on C^d (x) C^dprime with index i*dprime + j.
/// Tracing out B yields a d x d operator, tracing out A a dprime x dprime one.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int d, int dprime, Subsystem traced_out);

/// Von Neumann entropy -sum l log(l), in the given logarithm base.
double von_neumann_entropy(const ComplexMatrix& rho, double log_base = 2.0,
                           double clip = tol::kEntropyClip);

/// Number of eigenvalues of a Hermitian matrix above threshold.
int hermitian_rank(const ComplexMatrix& m, double threshold);

bool all_finite(const ComplexMatrix& m);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

}  // namespace numerics
}  // namespace umeb
