#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umeb/quantum_states.hpp"

namespace umeb {

/// Ordered set of bipartite states sharing (d, dprime). Each member carries a
/// flag telling whether it is a maximally entangled member or an auxiliary
/// (e.g. product) member completing the basis.
///
/// Construction only enforces shared dimensions and label/flag lengths;
/// orthonormality is checked by the operations that need it so that a
/// defective set can still be loaded and diagnosed.
class BasisSet {
 public:
  BasisSet(int d, int dprime, std::vector<BipartiteState> states,
           std::vector<std::string> labels = {},
           std::optional<std::vector<bool>> me_flags = std::nullopt);

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  int dim() const { return d_ * dprime_; }
  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  bool complete() const { return size() == static_cast<std::size_t>(dim()); }

  const std::vector<BipartiteState>& states() const { return states_; }
  const BipartiteState& state(std::size_t i) const { return states_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<bool>& me_flags() const { return me_flags_; }
  std::size_t me_count() const;

 private:
  int d_;
  int dprime_;
  std::vector<BipartiteState> states_;
  std::vector<std::string> labels_;
  std::vector<bool> me_flags_;
};

enum class Members { MeFlagged, All };

/// |Phi_nm> = (U_nm (x) I)|Phi>, ordered by (n, m); requires 2 <= d < dprime.
BasisSet build_weyl_umeb(int d, int dprime);

/// Complete basis of C^2 (x) C^3: the four Pauli-rotated maximally entangled
/// states plus two product states on |2'>.
BasisSet build_23_first();

/// Complete basis of C^2 (x) C^3 built on the rotated qutrit basis x', y', z'.
BasisSet build_23_second();

/// The rotated qutrit basis {x', y', z'} used by build_23_second, as columns.
ComplexMatrix qutrit_xyz_basis();

/// G(i, j) = <state_i|state_j>
ComplexMatrix gram_matrix(const BasisSet& basis);

/// max |G - I|
double gram_deviation(const BasisSet& basis);

/// I - sum |phi_i><phi_i| over the selected members.
ComplexMatrix complement_projector(const BasisSet& basis, Members members = Members::MeFlagged);

enum class CertificateMethod { SupportRank, NumericSearch };
enum class Verdict { Unextendible, Extendible, Inconclusive };

const char* to_string(CertificateMethod m);
const char* to_string(Verdict v);

struct CertificateReport {
  CertificateMethod method = CertificateMethod::SupportRank;
  int complement_dimension = 0;
  int b_support_rank = 0;  // rank of Tr_A P (dprime x dprime)
  int a_support_rank = 0;  // rank of Tr_B P (d x d)
  int schmidt_rank_bound = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<BipartiteState> witness;  // present iff verdict == Extendible
  std::optional<double> search_best_F;    // set when a numeric search ran
};

/// Every state in the range of the complement projector P has Schmidt rank at
/// most min(rank Tr_A P, rank Tr_B P). When that bound is below d, no
/// maximally entangled state is orthogonal to the ME-flagged members.
CertificateReport support_rank_certificate(const BasisSet& basis,
                                           double rank_threshold = tol::kSupportRank,
                                           double orthonormal_tol = 1e-9);

/// Coefficient matrix of the orthogonality equations <Phi_nm|Psi> = 0 for a
/// candidate Psi = (U (x) V) sum_p sqrt(lambda_p)|p>|p'>, as the four-factor
/// product F * blockdiag(A^k) * blockdiag(U) * blockdiag(W). Row index
/// n * d + m, column index k * d + p; M * vec(V[0:d, 0:d]) = sqrt(d) * (<Phi_nm|Psi>).
struct MMatrix {
  ComplexMatrix m;
  double abs_det_factored;  // |det F| * |det A|^.. * |det U|^d * prod(lambda)^(d/2)
};

MMatrix assemble_M(const ComplexMatrix& u, const std::vector<double>& lambdas, int d);

/// Cyclic shift with ones on the superdiagonal and at (d-1, 0).
ComplexMatrix cyclic_shift(int d);

}  // namespace umeb
