#pragma once

#include <vector>

#include "umeb/numerics.hpp"

namespace umeb {

/// Unit vector in C^d (x) C^dprime, with d <= dprime and amplitude index
/// i * dprime + j for |i>|j'>.
class BipartiteState {
 public:
  /// Validates dimensions (2 <= d <= dprime), length and unit norm within norm_tol.
  BipartiteState(int d, int dprime, ComplexVector amplitudes, double norm_tol = tol::kStateNorm);

  /// Normalizes a nonzero vector first.
  static BipartiteState normalized(int d, int dprime, ComplexVector amplitudes);

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  int dim() const { return d_ * dprime_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](int index) const { return amplitudes_(index); }

 private:
  int d_;
  int dprime_;
  ComplexVector amplitudes_;
};

/// <a|b>
Complex inner(const BipartiteState& a, const BipartiteState& b);

/// |<a|b>| == 1 within tol, i.e. equal up to a global phase.
bool equal_up_to_phase(const BipartiteState& a, const BipartiteState& b, double tol = 1e-10);

/// Product state |a> (x) |b> of two (not necessarily normalized) local vectors.
BipartiteState product_state(const ComplexVector& a, const ComplexVector& b);

/// Schmidt form sum_p s_p |l_p>|r_p>: coefficients descending, length d;
/// left vectors are the columns of a d x d matrix, right vectors the columns
/// of a dprime x d matrix.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  ComplexMatrix left_vectors;
  ComplexMatrix right_vectors;
};

/// d x dprime matrix X with X(i, j) = amplitude[i * dprime + j].
ComplexMatrix reshape_to_matrix(const BipartiteState& psi);

SchmidtDecomposition schmidt(const BipartiteState& psi);

int schmidt_rank(const BipartiteState& psi, double tol = tol::kMaxEntangled);

struct MaxEntanglementCheck {
  bool flag;
  double deviation;  // max_p |s_p - 1/sqrt(d)|
};

MaxEntanglementCheck is_maximally_entangled(const BipartiteState& psi,
                                            double tol = tol::kMaxEntangled);

/// Weyl operator U_nm = sum_k zeta^{nk} |k+m mod d><k| with zeta = exp(2 pi i / d).
ComplexMatrix weyl_operator(int d, int n, int m);

/// Pauli matrix sigma_0..sigma_3 (identity, X, Y, Z).
ComplexMatrix pauli(int index);

/// (1/sqrt d) sum_{p<d} |p>|p'>
BipartiteState standard_mes(int d, int dprime);

/// (op_a (x) op_b)|psi>; both operators must be unitary within unitary_tol.
BipartiteState apply_local(const BipartiteState& psi, const ComplexMatrix& op_a,
                           const ComplexMatrix& op_b, double unitary_tol = 1e-9);

/// Raw (op_a (x) op_b)|psi> without unitarity or normalization checks.
ComplexVector apply_local_unchecked(const BipartiteState& psi, const ComplexMatrix& op_a,
                                    const ComplexMatrix& op_b);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-9);

}  // namespace umeb
