#pragma once

#include <cstdint>
#include <functional>

#include "umeb/basis.hpp"

namespace umeb {

struct SearchConfig {
  int restarts = 64;
  int max_iters = 10000;
  double convergence_tol = 1e-12;  // on |delta F| between iterations
  double witness_tol = 1e-6;       // on 1 - F
  std::uint64_t seed = 42;

  /// Throws ContractViolation unless all fields are positive and
  /// witness_tol > convergence_tol.
  void validate() const;
};

enum class SearchVerdict { FoundMe, NoneFound };

const char* to_string(SearchVerdict v);

struct SearchResult {
  BipartiteState best_state;
  double best_F = 0.0;
  double best_min_coeff_scaled = 0.0;  // sqrt(d) * s_min of best_state
  int iterations_used = 0;             // summed over restarts
  int restarts_used = 0;
  int restarts_abandoned = 0;
  bool converged = false;              // of the restart that produced best_state
  SearchVerdict verdict = SearchVerdict::NoneFound;
};

struct NearestMe {
  BipartiteState state;
  double overlap;  // |<m|psi>| = (sum_p s_p) / sqrt(d)
  bool unique;     // false when psi has a vanishing Schmidt coefficient
};

/// Closest maximally entangled state to psi: the polar part (1/sqrt d) L R^dagger
/// of the reshaped state X = L S R^dagger.
NearestMe nearest_me_state(const BipartiteState& psi);

/// F(psi) = (sum_p s_p)^2 / d, equal to 1 exactly for maximally entangled psi.
double me_fidelity(const BipartiteState& psi);

/// Called after every iteration with (restart, iteration, F).
using SearchObserver = std::function<void(int, int, double)>;

/// Maximizes F over unit vectors in the range of the projector by alternating
/// projections between the subspace and the maximally entangled set, from
/// `restarts` seeded Gaussian starting points. F never decreases within a
/// restart. Restart r draws from its own generator seeded by (seed, r).
SearchResult max_entanglement_in_subspace(const ComplexMatrix& projector, int d, int dprime,
                                          const SearchConfig& config,
                                          const SearchObserver& observer = {});

/// Support-rank certificate first; when that is inconclusive, search the
/// complement of the ME-flagged members for a maximally entangled witness.
/// A failed search leaves the verdict inconclusive.
CertificateReport certify(const BasisSet& basis, const SearchConfig& config);

}  // namespace umeb
