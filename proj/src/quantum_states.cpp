#include "umeb/quantum_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace umeb {

namespace {

void check_dims(int d, int dprime, const char* where) {
  if (d < 2 || dprime < d) {
    std::ostringstream msg;
    msg << where << ": need 2 <= d <= dprime, got d=" << d << " dprime=" << dprime;
    throw ContractViolation(msg.str());
  }
}

}  // namespace

BipartiteState::BipartiteState(int d, int dprime, ComplexVector amplitudes, double norm_tol)
    : d_(d), dprime_(dprime), amplitudes_(std::move(amplitudes)) {
  check_dims(d, dprime, "BipartiteState");
  if (amplitudes_.size() != static_cast<Eigen::Index>(d) * dprime) {
    throw ContractViolation("BipartiteState: amplitude count must equal d * dprime");
  }
  if (!numerics::all_finite(amplitudes_)) throw ContractViolation("BipartiteState: non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "BipartiteState: norm " << norm << " is not 1";
    throw ContractViolation(msg.str());
  }
}

BipartiteState BipartiteState::normalized(int d, int dprime, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ContractViolation("BipartiteState: cannot normalize");
  amplitudes /= norm;
  return BipartiteState(d, dprime, std::move(amplitudes));
}

Complex inner(const BipartiteState& a, const BipartiteState& b) {
  if (a.d() != b.d() || a.dprime() != b.dprime()) throw ContractViolation("inner: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());  // conjugate-linear in the first argument
}

bool equal_up_to_phase(const BipartiteState& a, const BipartiteState& b, double tol) {
  return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

BipartiteState product_state(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector amps(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) amps.segment(i * b.size(), b.size()) = a(i) * b;
  return BipartiteState::normalized(static_cast<int>(a.size()), static_cast<int>(b.size()), amps);
}

ComplexMatrix reshape_to_matrix(const BipartiteState& psi) {
  ComplexMatrix x(psi.d(), psi.dprime());
  for (int i = 0; i < psi.d(); ++i)
    for (int j = 0; j < psi.dprime(); ++j) x(i, j) = psi[i * psi.dprime() + j];
  return x;
}

SchmidtDecomposition schmidt(const BipartiteState& psi) {
  numerics::Svd f = numerics::svd(reshape_to_matrix(psi));
  // X = sum_p s_p l_p (row p of right_dagger), so |r_p> is that row untransposed
  return {std::move(f.singular_values), std::move(f.left), f.right_dagger.transpose()};
}

int schmidt_rank(const BipartiteState& psi, double tol) {
  int rank = 0;
  for (double s : schmidt(psi).coefficients)
    if (s > tol) ++rank;
  return rank;
}

MaxEntanglementCheck is_maximally_entangled(const BipartiteState& psi, double tol) {
  const double target = 1.0 / std::sqrt(static_cast<double>(psi.d()));
  double deviation = 0.0;
  for (double s : schmidt(psi).coefficients) deviation = std::max(deviation, std::abs(s - target));
  return {deviation <= tol, deviation};
}

ComplexMatrix weyl_operator(int d, int n, int m) {
  if (d < 1 || n < 0 || n >= d || m < 0 || m >= d) {
    std::ostringstream msg;
    msg << "weyl_operator: need 0 <= n, m < d, got d=" << d << " n=" << n << " m=" << m;
    throw ContractViolation(msg.str());
  }
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    // reduce n*k first so the angle stays in [0, 2 pi)
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((n * k) % d) / d;
    u((k + m) % d, k) = std::polar(1.0, angle);
  }
  return u;
}

ComplexMatrix pauli(int index) {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (index) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw ContractViolation("pauli: index must be 0..3");
  }
  return s;
}

BipartiteState standard_mes(int d, int dprime) {
  check_dims(d, dprime, "standard_mes");
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d) * dprime);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int p = 0; p < d; ++p) amps(p * dprime + p) = a;
  return BipartiteState(d, dprime, std::move(amps));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return numerics::max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())) <= tol;
}

ComplexVector apply_local_unchecked(const BipartiteState& psi, const ComplexMatrix& op_a,
                                    const ComplexMatrix& op_b) {
  if (op_a.rows() != psi.d() || op_a.cols() != psi.d() || op_b.rows() != psi.dprime() ||
      op_b.cols() != psi.dprime()) {
    throw ContractViolation("apply_local: operator dimensions do not match the state");
  }
  // (A (x) B) vec_row(X) = vec_row(A X B^T)
  const ComplexMatrix x = op_a * reshape_to_matrix(psi) * op_b.transpose();
  ComplexVector out(psi.dim());
  for (int i = 0; i < psi.d(); ++i)
    for (int j = 0; j < psi.dprime(); ++j) out(i * psi.dprime() + j) = x(i, j);
  return out;
}

BipartiteState apply_local(const BipartiteState& psi, const ComplexMatrix& op_a,
                           const ComplexMatrix& op_b, double unitary_tol) {
  ComplexVector out = apply_local_unchecked(psi, op_a, op_b);
  if (!is_unitary(op_a, unitary_tol) || !is_unitary(op_b, unitary_tol)) {
    throw ContractViolation("apply_local: operators must be unitary");
  }
  return BipartiteState(psi.d(), psi.dprime(), std::move(out));
}

}  // namespace umeb
