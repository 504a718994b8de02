#pragma once

#include "umeb/basis.hpp"

namespace umeb {

// Marginal naming: marginal_A is Tr_A(rho), the dprime x dprime operator left
// after tracing out A; marginal_B is Tr_B(rho), the d x d operator.
struct ChannelReport {
  ComplexMatrix rho_perp;
  ComplexMatrix marginal_A;
  ComplexMatrix marginal_B;
  double trace_preserving_deviation = 0.0;  // ||Tr_B rho - I_d/d||_F
  double unitality_deviation = 0.0;         // ||Tr_A rho - I_dprime/dprime||_F
  double entropy_A = 0.0;                   // S(Tr_A rho)
  double entropy_B = 0.0;                   // S(Tr_B rho)
  double log_base = 2.0;
};

/// Normalized projector onto the complement of the selected members. The
/// selection must contain exactly d^2 states and d * dprime > d^2.
ComplexMatrix rho_perp(const BasisSet& basis, Members members = Members::MeFlagged);

/// Lambda(X) = d * Tr_A[(X^T (x) I_dprime) rho_choi], mapping d x d operators
/// to dprime x dprime ones. Trace preserving iff Tr_B rho_choi = I_d / d.
ComplexMatrix apply_channel(const ComplexMatrix& rho_choi, const ComplexMatrix& x, int d, int dprime);

ChannelReport analyze(const BasisSet& basis, double log_base = 2.0, Members members = Members::MeFlagged);

}  // namespace umeb
