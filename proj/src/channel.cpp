#include "umeb/channel.hpp"

#include <sstream>

namespace umeb {

using numerics::Subsystem;

ComplexMatrix rho_perp(const BasisSet& basis, Members members) {
  const int d = basis.d();
  const std::size_t used = members == Members::All ? basis.size() : basis.me_count();
  if (used != static_cast<std::size_t>(d * d)) {
    std::ostringstream msg;
    msg << "rho_perp: need exactly d^2 = " << d * d << " members, got " << used;
    throw ContractViolation(msg.str());
  }
  if (basis.dim() <= d * d) throw ContractViolation("rho_perp: need d * dprime > d^2");
  return complement_projector(basis, members) / static_cast<double>(basis.dim() - d * d);
}

ComplexMatrix apply_channel(const ComplexMatrix& rho_choi, const ComplexMatrix& x, int d, int dprime) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * dprime;
  if (rho_choi.rows() != n || rho_choi.cols() != n) throw ContractViolation("apply_channel: Choi state has wrong size");
  if (x.rows() != d || x.cols() != d) throw ContractViolation("apply_channel: input must be d x d");
  const ComplexMatrix lifted = numerics::kron(x.transpose(), ComplexMatrix::Identity(dprime, dprime));
  return static_cast<double>(d) * numerics::partial_trace(lifted * rho_choi, d, dprime, Subsystem::A);
}

ChannelReport analyze(const BasisSet& basis, double log_base, Members members) {
  const int d = basis.d();
  const int dprime = basis.dprime();
  ChannelReport r;
  r.log_base = log_base;
  r.rho_perp = rho_perp(basis, members);
  r.marginal_A = numerics::partial_trace(r.rho_perp, d, dprime, Subsystem::A);
  r.marginal_B = numerics::partial_trace(r.rho_perp, d, dprime, Subsystem::B);
  r.trace_preserving_deviation = (r.marginal_B - ComplexMatrix::Identity(d, d) / d).norm();
  r.unitality_deviation = (r.marginal_A - ComplexMatrix::Identity(dprime, dprime) / dprime).norm();
  r.entropy_A = numerics::von_neumann_entropy(r.marginal_A, log_base);
  r.entropy_B = numerics::von_neumann_entropy(r.marginal_B, log_base);
  return r;
}

}  // namespace umeb
