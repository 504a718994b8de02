#pragma once

#include "umeb/basis.hpp"

namespace umeb {

struct OverlapReport {
  int dim = 0;
  Eigen::MatrixXd overlaps;  // |<b_i|c_j>|
  double target = 0.0;       // 1 / sqrt(dim)
  double max_deviation = 0.0;
  bool is_mub = false;
};

/// Overlaps between two complete orthonormal bases of the same C^d (x) C^dprime.
/// Unbiasedness is judged against the full dimension d * dprime.
OverlapReport overlap_matrix(const BasisSet& b1, const BasisSet& b2, double tol = 1e-9,
                             double orthonormal_tol = 1e-9);

}  // namespace umeb
