#include "umeb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace umeb::numerics {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Svd svd(const ComplexMatrix& m) {
  if (m.size() == 0) throw ContractViolation("svd: empty matrix");
  if (!all_finite(m)) throw ContractViolation("svd: non-finite entry");

  Eigen::JacobiSVD<ComplexMatrix> jacobi(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (jacobi.info() != Eigen::Success) throw NumericalFailure("svd: Jacobi sweeps did not converge");

  Svd out;
  out.left = jacobi.matrixU();
  out.right_dagger = jacobi.matrixV().adjoint();
  const auto& sv = jacobi.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());

  for (Eigen::Index k = 0; k < out.left.cols(); ++k) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < out.left.rows(); ++i) {
      const double a = std::abs(out.left(i, k));
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
    if (best <= 0.0) continue;
    const Complex phase = out.left(pivot, k) / best;
    out.left.col(k) *= std::conj(phase);
    out.right_dagger.row(k) *= phase;
    out.left(pivot, k) = Complex(std::abs(out.left(pivot, k)), 0.0);
  }

  Eigen::VectorXd sigma = sv;
  const ComplexMatrix rebuilt = out.left * sigma.asDiagonal() * out.right_dagger;
  const double scale = std::max(m.norm(), 1e-300);
  if (!all_finite(rebuilt) || (rebuilt - m).norm() > 1e-10 * scale + 1e-300) {
    throw NumericalFailure("svd: reconstruction residual exceeds tolerance");
  }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols() || m.size() == 0) {
    throw ContractViolation("hermitian_eig: matrix must be square and nonempty");
  }
  if (!all_finite(m)) throw ContractViolation("hermitian_eig: non-finite entry");
  const double skew = max_abs(m - m.adjoint());
  if (skew > hermitian_tol * std::max(1.0, max_abs(m))) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (max |M - M^dagger| = " << skew << ")";
    throw ContractViolation(msg.str());
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericalFailure("hermitian_eig: solver did not converge");

  // Eigen returns ascending order.
  const Eigen::Index n = sym.rows();
  HermitianEig out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int d, int dprime, Subsystem traced_out) {
  if (d < 1 || dprime < 1) throw ContractViolation("partial_trace: dimensions must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * dprime;
  if (rho.rows() != n || rho.cols() != n) {
    std::ostringstream msg;
    msg << "partial_trace: expected " << n << "x" << n << " operator, got " << rho.rows() << "x"
        << rho.cols();
    throw ContractViolation(msg.str());
  }

  if (traced_out == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int ip = 0; ip < d; ++ip)
        for (int j = 0; j < dprime; ++j) out(i, ip) += rho(i * dprime + j, ip * dprime + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dprime, dprime);
  for (int j = 0; j < dprime; ++j)
    for (int jp = 0; jp < dprime; ++jp)
      for (int i = 0; i < d; ++i) out(j, jp) += rho(i * dprime + j, i * dprime + jp);
  return out;
}

double von_neumann_entropy(const ComplexMatrix& rho, double log_base, double clip) {
  if (!(log_base > 0.0) || log_base == 1.0) {
    throw ContractViolation("von_neumann_entropy: log base must be positive and != 1");
  }
  const HermitianEig eig = hermitian_eig(rho, tol::kPsd);
  double trace = 0.0;
  for (double l : eig.eigenvalues) {
    if (l < -tol::kPsd) throw ContractViolation("von_neumann_entropy: matrix is not positive semidefinite");
    trace += l;
  }
  if (std::abs(trace - 1.0) > tol::kPsd) throw ContractViolation("von_neumann_entropy: trace is not 1");

  double s = 0.0;
  for (double l : eig.eigenvalues) {
    if (l > clip) s -= l * std::log(l);
  }
  return s / std::log(log_base);
}

int hermitian_rank(const ComplexMatrix& m, double threshold) {
  const HermitianEig eig = hermitian_eig(m);
  return static_cast<int>(std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                        [threshold](double l) { return l > threshold; }));
}

}  // namespace umeb::numerics
