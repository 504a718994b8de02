#include "umeb/mub.hpp"

#include <cmath>

namespace umeb {

OverlapReport overlap_matrix(const BasisSet& b1, const BasisSet& b2, double tol, double orthonormal_tol) {
  if (b1.d() != b2.d() || b1.dprime() != b2.dprime()) throw ContractViolation("overlap_matrix: dimension mismatch");
  if (!b1.complete() || !b2.complete()) throw ContractViolation("overlap_matrix: both bases must be complete");
  if (gram_deviation(b1) > orthonormal_tol || gram_deviation(b2) > orthonormal_tol) {
    throw ContractViolation("overlap_matrix: bases must be orthonormal");
  }

  OverlapReport r;
  r.dim = b1.dim();
  r.target = 1.0 / std::sqrt(static_cast<double>(r.dim));
  r.overlaps.resize(r.dim, r.dim);
  for (int i = 0; i < r.dim; ++i) {
    for (int j = 0; j < r.dim; ++j) {
      const double o = std::abs(inner(b1.state(i), b2.state(j)));
      r.overlaps(i, j) = o;
      r.max_deviation = std::max(r.max_deviation, std::abs(o - r.target));
    }
  }
  r.is_mub = r.max_deviation <= tol;
  return r;
}

}  // namespace umeb
