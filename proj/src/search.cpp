#include "umeb/search.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace umeb {

void SearchConfig::validate() const {
  if (restarts <= 0 || max_iters <= 0 || !(convergence_tol > 0.0) || !(witness_tol > 0.0)) {
    throw ContractViolation("SearchConfig: restarts, max_iters and tolerances must be positive");
  }
  if (!(witness_tol > convergence_tol)) {
    throw ContractViolation("SearchConfig: witness_tol must exceed convergence_tol");
  }
}

const char* to_string(SearchVerdict v) {
  return v == SearchVerdict::FoundMe ? "found_me" : "none_found";
}

NearestMe nearest_me_state(const BipartiteState& psi) {
  const numerics::Svd f = numerics::svd(reshape_to_matrix(psi));
  const int d = psi.d();
  const ComplexMatrix polar = f.left * f.right_dagger / std::sqrt(static_cast<double>(d));

  ComplexVector amps(psi.dim());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < psi.dprime(); ++j) amps(i * psi.dprime() + j) = polar(i, j);

  const double sum = std::accumulate(f.singular_values.begin(), f.singular_values.end(), 0.0);
  return {BipartiteState::normalized(d, psi.dprime(), std::move(amps)),
          sum / std::sqrt(static_cast<double>(d)), f.singular_values.back() > 1e-14};
}

double me_fidelity(const BipartiteState& psi) {
  const auto s = schmidt(psi).coefficients;
  const double sum = std::accumulate(s.begin(), s.end(), 0.0);
  return sum * sum / psi.d();
}

namespace {

struct RestartOutcome {
  std::optional<BipartiteState> state;
  double F = -1.0;
  int iterations = 0;
  bool converged = false;
};

RestartOutcome run_restart(const ComplexMatrix& projector, int d, int dprime,
                           const SearchConfig& config, int restart, const SearchObserver& observer) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;

  const Eigen::Index n = projector.rows();
  ComplexVector g(n);
  for (Eigen::Index k = 0; k < n; ++k) g(k) = Complex(gauss(rng), gauss(rng));
  ComplexVector v = projector * g;
  RestartOutcome out;
  if (v.norm() < 1e-14) return out;

  BipartiteState psi = BipartiteState::normalized(d, dprime, v);
  double previous = -1.0;
  for (int it = 0; it < config.max_iters; ++it) {
    const NearestMe near = nearest_me_state(psi);
    const double F = near.overlap * near.overlap;
    out.iterations = it + 1;
    out.state = psi;
    out.F = F;
    if (observer) observer(restart, it, F);
    if (std::abs(F - previous) < config.convergence_tol) {
      out.converged = true;
      break;
    }
    previous = F;

    const ComplexVector pm = projector * near.state.amplitudes();
    if (pm.norm() < 1e-14) return RestartOutcome{};  // abandoned
    psi = BipartiteState::normalized(d, dprime, pm);
  }
  return out;
}

}  // namespace

SearchResult max_entanglement_in_subspace(const ComplexMatrix& projector, int d, int dprime,
                                          const SearchConfig& config, const SearchObserver& observer) {
  config.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * dprime;
  if (d < 2 || dprime < d) throw ContractViolation("max_entanglement_in_subspace: need 2 <= d <= dprime");
  if (projector.rows() != n || projector.cols() != n) {
    throw ContractViolation("max_entanglement_in_subspace: projector must be (d*dprime) square");
  }
  if (numerics::max_abs(projector - projector.adjoint()) > 1e-9 ||
      numerics::max_abs(projector * projector - projector) > 1e-9) {
    throw ContractViolation("max_entanglement_in_subspace: input is not a Hermitian idempotent");
  }
  if (std::abs(projector.trace()) < 0.5) throw ContractViolation("max_entanglement_in_subspace: zero projector");

  std::optional<RestartOutcome> best;
  SearchResult result{BipartiteState(standard_mes(d, dprime))};
  for (int r = 0; r < config.restarts; ++r) {
    RestartOutcome o = run_restart(projector, d, dprime, config, r, observer);
    ++result.restarts_used;
    result.iterations_used += o.iterations;
    if (!o.state) {
      ++result.restarts_abandoned;
      continue;
    }
    // strict comparison keeps the lowest restart index on ties
    if (!best || o.F > best->F) best = std::move(o);
  }
  if (!best) throw NumericalFailure("max_entanglement_in_subspace: every restart was abandoned");

  result.best_state = *best->state;
  result.best_F = best->F;
  result.converged = best->converged;
  const auto s = schmidt(result.best_state).coefficients;
  result.best_min_coeff_scaled = std::sqrt(static_cast<double>(d)) * s.back();
  result.verdict = 1.0 - result.best_F <= config.witness_tol ? SearchVerdict::FoundMe : SearchVerdict::NoneFound;
  return result;
}

CertificateReport certify(const BasisSet& basis, const SearchConfig& config) {
  CertificateReport report = support_rank_certificate(basis);
  if (report.verdict != Verdict::Inconclusive) return report;

  report.method = CertificateMethod::NumericSearch;
  if (report.complement_dimension == 0) return report;
  const ComplexMatrix p = complement_projector(basis, Members::MeFlagged);
  const SearchResult found = max_entanglement_in_subspace(p, basis.d(), basis.dprime(), config);
  report.search_best_F = found.best_F;
  if (found.verdict == SearchVerdict::FoundMe) {
    // the witness is the nearest ME state, projected back into the complement
    const NearestMe near = nearest_me_state(found.best_state);
    const ComplexVector projected = p * near.state.amplitudes();
    BipartiteState witness = BipartiteState::normalized(basis.d(), basis.dprime(), projected);
    const double residual = (witness.amplitudes() - p * witness.amplitudes()).norm();
    if (is_maximally_entangled(witness, config.witness_tol).flag && residual <= 1e-8) {
      report.verdict = Verdict::Extendible;
      report.witness = std::move(witness);
    }
  }
  return report;
}

}  // namespace umeb
