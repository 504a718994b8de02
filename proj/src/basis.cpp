#include "umeb/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace umeb {

BasisSet::BasisSet(int d, int dprime, std::vector<BipartiteState> states,
                   std::vector<std::string> labels, std::optional<std::vector<bool>> me_flags)
    : d_(d), dprime_(dprime), states_(std::move(states)), labels_(std::move(labels)) {
  if (d < 2 || dprime < d) throw ContractViolation("BasisSet: need 2 <= d <= dprime");
  for (const auto& s : states_) {
    if (s.d() != d || s.dprime() != dprime) {
      throw ContractViolation("BasisSet: all states must share (d, dprime)");
    }
  }
  if (!labels_.empty() && labels_.size() != states_.size()) {
    throw ContractViolation("BasisSet: label count must match state count");
  }
  if (me_flags) {
    if (me_flags->size() != states_.size()) {
      throw ContractViolation("BasisSet: me_flags count must match state count");
    }
    me_flags_ = std::move(*me_flags);
  } else {
    me_flags_.reserve(states_.size());
    for (const auto& s : states_) me_flags_.push_back(is_maximally_entangled(s).flag);
  }
}

std::size_t BasisSet::me_count() const {
  return static_cast<std::size_t>(std::count(me_flags_.begin(), me_flags_.end(), true));
}

BasisSet build_weyl_umeb(int d, int dprime) {
  if (d < 2 || d >= dprime) {
    std::ostringstream msg;
    msg << "build_weyl_umeb: need 2 <= d < dprime, got d=" << d << " dprime=" << dprime;
    throw ContractViolation(msg.str());
  }
  const BipartiteState phi = standard_mes(d, dprime);
  const ComplexMatrix id_b = ComplexMatrix::Identity(dprime, dprime);
  std::vector<BipartiteState> states;
  std::vector<std::string> labels;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      states.push_back(apply_local(phi, weyl_operator(d, n, m), id_b));
      labels.push_back("Phi_" + std::to_string(n) + "_" + std::to_string(m));
    }
  }
  std::vector<bool> flags(states.size(), true);
  return BasisSet(d, dprime, std::move(states), std::move(labels), std::move(flags));
}

ComplexMatrix qutrit_xyz_basis() {
  const double r3 = std::sqrt(3.0);
  const Complex i(0.0, 1.0);
  const Complex omega = (1.0 + r3 * i) / 2.0;
  ComplexMatrix b(3, 3);
  // columns x', y', z'
  b << 1.0, (-r3 + i) / 2.0, -1.0,
       omega, i, 1.0,
       1.0, -i, omega;
  return b / r3;
}

BasisSet build_23_first() {
  const double r3 = std::sqrt(3.0);
  const BipartiteState phi0 = standard_mes(2, 3);
  const ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);

  std::vector<BipartiteState> states;
  for (int k = 0; k < 4; ++k) states.push_back(apply_local(phi0, pauli(k), id3));

  ComplexVector ket2(3);
  ket2 << 0.0, 0.0, 1.0;
  ComplexVector a4(2), a5(2);
  a4 << 0.5, r3 / 2.0;
  a5 << r3 / 2.0, -0.5;
  states.push_back(product_state(a4, ket2));
  states.push_back(product_state(a5, ket2));

  return BasisSet(2, 3, std::move(states), {"phi_0", "phi_1", "phi_2", "phi_3", "phi_4", "phi_5"},
                  std::vector<bool>{true, true, true, true, false, false});
}

BasisSet build_23_second() {
  const double r3 = std::sqrt(3.0);
  const Complex i(0.0, 1.0);
  const ComplexMatrix xyz = qutrit_xyz_basis();
  const ComplexVector x = xyz.col(0), y = xyz.col(1), z = xyz.col(2);

  ComplexVector seed(6);
  seed << x, y;
  const BipartiteState psi = BipartiteState::normalized(2, 3, seed);
  const ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);

  std::vector<BipartiteState> states;
  for (int k = 0; k < 4; ++k) states.push_back(apply_local(psi, pauli(k), id3));

  ComplexVector a4(2), a5(2);
  a4 << (1.0 + r3 * i) / 2.0, (r3 - i) / 2.0;
  a5 << (r3 - i) / 2.0, (1.0 + r3 * i) / 2.0;
  states.push_back(product_state(a4, z));
  states.push_back(product_state(a5, z));

  return BasisSet(2, 3, std::move(states), {"psi_0", "psi_1", "psi_2", "psi_3", "psi_4", "psi_5"},
                  std::vector<bool>{true, true, true, true, false, false});
}

ComplexMatrix gram_matrix(const BasisSet& basis) {
  if (basis.empty()) throw ContractViolation("gram_matrix: empty basis");
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = inner(basis.state(static_cast<std::size_t>(i)), basis.state(static_cast<std::size_t>(j)));
  return g;
}

double gram_deviation(const BasisSet& basis) {
  if (basis.empty()) return 0.0;
  const ComplexMatrix g = gram_matrix(basis);
  return numerics::max_abs(g - ComplexMatrix::Identity(g.rows(), g.cols()));
}

ComplexMatrix complement_projector(const BasisSet& basis, Members members) {
  ComplexMatrix p = ComplexMatrix::Identity(basis.dim(), basis.dim());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (members == Members::MeFlagged && !basis.me_flags()[k]) continue;
    const ComplexVector& v = basis.state(k).amplitudes();
    p -= v * v.adjoint();
  }
  return p;
}

const char* to_string(CertificateMethod m) {
  return m == CertificateMethod::SupportRank ? "support-rank" : "numeric-search";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Unextendible: return "unextendible";
    case Verdict::Extendible: return "extendible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CertificateReport support_rank_certificate(const BasisSet& basis, double rank_threshold,
                                           double orthonormal_tol) {
  std::vector<BipartiteState> me_states;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!basis.me_flags()[k]) continue;
    const auto check = is_maximally_entangled(basis.state(k));
    if (!check.flag) {
      std::ostringstream msg;
      msg << "support_rank_certificate: member " << k << " is flagged maximally entangled but deviates by "
          << check.deviation;
      throw ContractViolation(msg.str());
    }
    me_states.push_back(basis.state(k));
  }
  if (!me_states.empty()) {
    const BasisSet subset(basis.d(), basis.dprime(), me_states, {}, std::vector<bool>(me_states.size(), true));
    if (gram_deviation(subset) > orthonormal_tol) {
      throw ContractViolation("support_rank_certificate: ME-flagged members are not orthonormal");
    }
  }

  const ComplexMatrix p = complement_projector(basis, Members::MeFlagged);
  CertificateReport report;
  report.method = CertificateMethod::SupportRank;
  report.complement_dimension = basis.dim() - static_cast<int>(me_states.size());
  report.b_support_rank =
      numerics::hermitian_rank(numerics::partial_trace(p, basis.d(), basis.dprime(), numerics::Subsystem::A),
                               rank_threshold);
  report.a_support_rank =
      numerics::hermitian_rank(numerics::partial_trace(p, basis.d(), basis.dprime(), numerics::Subsystem::B),
                               rank_threshold);
  report.schmidt_rank_bound = std::min({basis.d(), report.a_support_rank, report.b_support_rank});
  report.verdict = report.schmidt_rank_bound < basis.d() ? Verdict::Unextendible : Verdict::Inconclusive;
  return report;
}

ComplexMatrix cyclic_shift(int d) {
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) a(i, (i + 1) % d) = 1.0;
  return a;
}

MMatrix assemble_M(const ComplexMatrix& u, const std::vector<double>& lambdas, int d) {
  if (d < 1 || u.rows() != d || u.cols() != d) throw ContractViolation("assemble_M: U must be d x d");
  if (!is_unitary(u)) throw ContractViolation("assemble_M: U must be unitary");
  if (lambdas.size() != static_cast<std::size_t>(d)) throw ContractViolation("assemble_M: need d lambdas");
  double sum = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0)) throw ContractViolation("assemble_M: lambdas must be positive");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ContractViolation("assemble_M: lambdas must sum to 1");

  const int n = d * d;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  ComplexMatrix dft(d, d);  // entries zeta^{-nk}
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k)
      dft(r, k) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((r * k) % d) / d);
  const ComplexMatrix f = numerics::kron(dft, id);

  const ComplexMatrix a = cyclic_shift(d);
  ComplexMatrix shifts = ComplexMatrix::Zero(n, n);
  ComplexMatrix a_power = id;
  for (int k = 0; k < d; ++k) {
    shifts.block(k * d, k * d, d, d) = a_power;
    a_power = a_power * a;
  }

  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  double lambda_product = 1.0;
  for (int p = 0; p < d; ++p) {
    w(p, p) = std::sqrt(lambdas[static_cast<std::size_t>(p)]);
    lambda_product *= lambdas[static_cast<std::size_t>(p)];
  }
  const ComplexMatrix unitaries = numerics::kron(id, u);
  const ComplexMatrix weights = numerics::kron(id, w);

  MMatrix out;
  out.m = f * shifts * unitaries * weights;
  // dft / sqrt(d) is unitary, so |det dft| = d^(d/2) and |det (dft (x) I_d)| = d^(d^2/2);
  // permutations have |det| = 1.
  const double abs_det_f = std::pow(static_cast<double>(d), 0.5 * d * d);
  const double abs_det_shift = 1.0;
  const double abs_det_u = std::abs(u.determinant());
  out.abs_det_factored = abs_det_f * abs_det_shift * std::pow(abs_det_u, d) * std::pow(lambda_product, 0.5 * d);
  return out;
}

}  // namespace umeb
