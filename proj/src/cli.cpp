#include "umeb/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umeb/channel.hpp"
#include "umeb/io.hpp"
#include "umeb/mub.hpp"
#include "umeb/search.hpp"

namespace umeb::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string kind;
  int d = 0;
  int dprime = 0;
  int n = -1;
  int m = -1;
  std::string out_path;
  std::string path;
  std::string path_b;
  double tol = 1e-9;
  int restarts = SearchConfig{}.restarts;
  int max_iters = SearchConfig{}.max_iters;
  std::uint64_t seed = SearchConfig{}.seed;
  std::string log_base = "2";
  bool json = false;
  bool all_members = false;
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json certificate_to_json(const CertificateReport& r) {
  json j = {{"method", to_string(r.method)},
            {"complement_dimension", r.complement_dimension},
            {"b_support_rank", r.b_support_rank},
            {"a_support_rank", r.a_support_rank},
            {"schmidt_rank_bound", r.schmidt_rank_bound},
            {"verdict", to_string(r.verdict)}};
  if (r.search_best_F) j["search_best_F"] = *r.search_best_F;
  if (r.witness) j["witness"] = io::state_to_json(*r.witness);
  return j;
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  c.restarts = o.restarts;
  c.max_iters = o.max_iters;
  c.seed = o.seed;
  c.validate();
  return c;
}

int cmd_construct(const Options& o, std::ostream& out) {
  BasisSet basis = [&] {
    if (o.kind == "weyl") {
      if (o.d < 2 || o.d >= o.dprime) {
        throw ContractViolation("--kind weyl needs --d and --dprime with 2 <= d < dprime");
      }
      return build_weyl_umeb(o.d, o.dprime);
    }
    if (o.kind == "c23-first") return build_23_first();
    return build_23_second();
  }();
  io::write_basis_file(o.out_path, basis);
  if (o.json) {
    emit_json(out, {{"out", o.out_path}, {"members", basis.size()}, {"me_members", basis.me_count()},
                    {"d", basis.d()}, {"dprime", basis.dprime()}});
  } else {
    out << "wrote " << o.out_path << ": " << basis.size() << " members, " << basis.me_count()
        << " maximally entangled, d=" << basis.d() << " dprime=" << basis.dprime() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisSet basis = io::read_basis_file(o.path, io::LoadMode::StructureOnly, &err);
  const double gram_dev = gram_deviation(basis);
  bool ok = gram_dev <= o.tol;

  std::vector<double> deviations;
  std::vector<bool> consistent;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double dev = is_maximally_entangled(basis.state(k)).deviation;
    deviations.push_back(dev);
    // flagged members must be ME at tol; unflagged ones must not be
    const bool good = basis.me_flags()[k] ? dev <= o.tol : dev > tol::kMaxEntangled;
    consistent.push_back(good);
    ok = ok && good;
  }

  if (o.json) {
    emit_json(out, {{"path", o.path}, {"members", basis.size()}, {"gram_deviation", gram_dev},
                    {"me_deviation", deviations}, {"me_flags", basis.me_flags()},
                    {"flag_consistent", consistent}, {"tol", o.tol}, {"passed", ok}});
  } else {
    out << std::setprecision(6) << "gram deviation: " << gram_dev << (gram_dev <= o.tol ? "  ok" : "  FAIL") << '\n';
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out << "  [" << k << "] " << (basis.labels().empty() ? "" : basis.labels()[k] + " ")
          << (basis.me_flags()[k] ? "ME" : "aux") << " deviation " << deviations[k]
          << (consistent[k] ? "  ok" : "  FAIL") << '\n';
    }
    out << (ok ? "verify: passed" : "verify: FAILED") << '\n';
  }
  return ok ? kOk : kNegative;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisSet basis = io::read_basis_file(o.path, io::LoadMode::Strict, &err);
  const CertificateReport r = certify(basis, search_config(o));
  if (o.json) {
    json j = certificate_to_json(r);
    j["seed"] = o.seed;
    emit_json(out, j);
  } else {
    out << "seed: " << o.seed << '\n'
        << "method: " << to_string(r.method) << '\n'
        << "complement dimension: " << r.complement_dimension << '\n'
        << "support ranks: B " << r.b_support_rank << ", A " << r.a_support_rank << '\n'
        << "Schmidt rank bound: " << r.schmidt_rank_bound << " (d = " << basis.d() << ")\n";
    if (r.search_best_F) out << "search best F: " << std::setprecision(15) << *r.search_best_F << '\n';
    out << "verdict: " << to_string(r.verdict) << '\n';
  }
  switch (r.verdict) {
    case Verdict::Unextendible: return kOk;
    case Verdict::Extendible: return kNegative;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisSet basis = io::read_basis_file(o.path, io::LoadMode::Strict, &err);
  const ComplexMatrix p = complement_projector(basis, o.all_members ? Members::All : Members::MeFlagged);
  const SearchResult r = max_entanglement_in_subspace(p, basis.d(), basis.dprime(), search_config(o));
  if (o.json) {
    emit_json(out, {{"seed", o.seed},
                    {"verdict", to_string(r.verdict)},
                    {"best_F", r.best_F},
                    {"best_min_coeff_scaled", r.best_min_coeff_scaled},
                    {"iterations_used", r.iterations_used},
                    {"restarts_used", r.restarts_used},
                    {"restarts_abandoned", r.restarts_abandoned},
                    {"converged", r.converged},
                    {"best_state", io::state_to_json(r.best_state)}});
  } else {
    out << std::setprecision(15) << "seed: " << o.seed << '\n'
        << "best F: " << r.best_F << "  (1 - F = " << 1.0 - r.best_F << ")\n"
        << "sqrt(d) * s_min: " << r.best_min_coeff_scaled << '\n'
        << "restarts: " << r.restarts_used << " (" << r.restarts_abandoned << " abandoned), iterations: "
        << r.iterations_used << ", converged: " << (r.converged ? "yes" : "no") << '\n'
        << "verdict: " << to_string(r.verdict) << '\n';
  }
  return r.verdict == SearchVerdict::FoundMe ? kOk : kNegative;
}

int cmd_mub(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisSet a = io::read_basis_file(o.path, io::LoadMode::Strict, &err);
  const BasisSet b = io::read_basis_file(o.path_b, io::LoadMode::Strict, &err);
  const OverlapReport r = overlap_matrix(a, b, o.tol, io::kOrthonormalAccept);
  if (o.json) {
    json rows = json::array();
    for (int i = 0; i < r.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < r.dim; ++j) row.push_back(r.overlaps(i, j));
      rows.push_back(std::move(row));
    }
    emit_json(out, {{"dim", r.dim}, {"target", r.target}, {"max_deviation", r.max_deviation},
                    {"tol", o.tol}, {"is_mub", r.is_mub}, {"overlaps", rows}});
  } else {
    out << std::setprecision(10) << "dim: " << r.dim << ", target 1/sqrt(dim) = " << r.target << '\n'
        << "max deviation: " << r.max_deviation << '\n'
        << "mutually unbiased: " << (r.is_mub ? "yes" : "no") << '\n';
  }
  return r.is_mub ? kOk : kNegative;
}

double parse_log_base(const std::string& s, int d) {
  if (s == "2") return 2.0;
  if (s == "e") return std::exp(1.0);
  if (s == "d") return static_cast<double>(d);
  throw ContractViolation("--log-base must be one of 2, e, d");
}

int cmd_channel(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisSet basis = io::read_basis_file(o.path, io::LoadMode::Strict, &err);
  const double base = parse_log_base(o.log_base, basis.d());
  const ChannelReport r = analyze(basis, base, o.all_members ? Members::All : Members::MeFlagged);
  if (o.json) {
    emit_json(out, {{"d", basis.d()},
                    {"dprime", basis.dprime()},
                    {"log_base", base},
                    {"entropy_A", r.entropy_A},
                    {"entropy_B", r.entropy_B},
                    {"trace_preserving_deviation", r.trace_preserving_deviation},
                    {"unitality_deviation", r.unitality_deviation},
                    {"marginal_A", io::matrix_to_json(r.marginal_A)},
                    {"marginal_B", io::matrix_to_json(r.marginal_B)},
                    {"rho_perp", io::matrix_to_json(r.rho_perp)}});
  } else {
    out << std::setprecision(12) << "log base: " << base << '\n'
        << "S(Tr_A rho_perp) = " << r.entropy_A << "  (dprime x dprime marginal)\n"
        << "S(Tr_B rho_perp) = " << r.entropy_B << "  (d x d marginal)\n"
        << "||Tr_B rho_perp - I/d||_F = " << r.trace_preserving_deviation << '\n'
        << "||Tr_A rho_perp - I/dprime||_F = " << r.unitality_deviation << '\n'
        << "trace preserving: " << (r.trace_preserving_deviation <= 1e-9 ? "yes" : "no")
        << ", unital: " << (r.unitality_deviation <= 1e-9 ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_pauli(const Options& o, std::ostream& out) {
  if (o.d < 1) throw ContractViolation("pauli needs --d >= 1");
  if ((o.n < 0) != (o.m < 0)) throw ContractViolation("pauli needs both --n and --m, or neither");
  std::vector<std::pair<int, int>> which;
  if (o.n >= 0) {
    which.emplace_back(o.n, o.m);
  } else {
    for (int n = 0; n < o.d; ++n)
      for (int m = 0; m < o.d; ++m) which.emplace_back(n, m);
  }
  json ops = json::array();
  for (auto [n, m] : which) {
    const ComplexMatrix u = weyl_operator(o.d, n, m);
    if (o.json) {
      ops.push_back({{"n", n}, {"m", m}, {"matrix", io::matrix_to_json(u)}});
      continue;
    }
    out << "U_" << n << m << " (d=" << o.d << "):\n";
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      out << " ";
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        const auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
        std::ostringstream cell;
        cell << std::setprecision(6) << clean(u(i, j).real()) << (clean(u(i, j).imag()) < 0 ? "-" : "+")
             << std::abs(clean(u(i, j).imag())) << "i";
        out << ' ' << std::setw(20) << cell.str();
      }
      out << '\n';
    }
  }
  if (o.json) emit_json(out, {{"d", o.d}, {"operators", ops}});
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Construct and certify unextendible maximally entangled bases"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a basis and write it as umeb-basis/1 JSON");
  construct->add_option("--kind", o.kind, "weyl | c23-first | c23-second")
      ->required()
      ->check(CLI::IsMember({"weyl", "c23-first", "c23-second"}));
  construct->add_option("--d", o.d, "A-side dimension (weyl)");
  construct->add_option("--dprime", o.dprime, "B-side dimension (weyl)");
  construct->add_option("-o,--out", o.out_path, "Output file")->required();
  construct->add_flag("--json", o.json, "Machine-readable summary on stdout");

  auto* verify = app.add_subcommand("verify", "Check orthonormality and per-member maximal entanglement");
  verify->add_option("path", o.path)->required();
  verify->add_option("--tol", o.tol, "Tolerance for Gram and ME deviations");
  verify->add_flag("--json", o.json);

  auto add_search_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--restarts", o.restarts, "Random restarts");
    cmd->add_option("--max-iters", o.max_iters, "Iterations per restart");
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_flag("--json", o.json);
  };

  auto* certify_cmd = app.add_subcommand("certify", "Decide unextendibility of the ME members");
  certify_cmd->add_option("path", o.path)->required();
  add_search_flags(certify_cmd);

  auto* search = app.add_subcommand("search", "Search the complement for a maximally entangled state");
  search->add_option("path", o.path)->required();
  search->add_flag("--all-members", o.all_members, "Use every member, not only the ME-flagged ones");
  add_search_flags(search);

  auto* mub = app.add_subcommand("mub", "Check whether two complete bases are mutually unbiased");
  mub->add_option("path_a", o.path)->required();
  mub->add_option("path_b", o.path_b)->required();
  mub->add_option("--tol", o.tol, "Tolerance on |overlap - 1/sqrt(dim)|");
  mub->add_flag("--json", o.json);

  auto* channel = app.add_subcommand("channel", "Analyze the complement state as a channel");
  channel->add_option("path", o.path)->required();
  channel->add_option("--log-base", o.log_base, "2 | e | d")->check(CLI::IsMember({"2", "e", "d"}));
  channel->add_flag("--all-members", o.all_members, "Use every member, not only the ME-flagged ones");
  channel->add_flag("--json", o.json);

  auto* pauli_cmd = app.add_subcommand("pauli", "Print Weyl operators U_nm");
  pauli_cmd->add_option("--d", o.d, "Dimension")->required();
  pauli_cmd->add_option("--n", o.n, "Phase index");
  pauli_cmd->add_option("--m", o.m, "Shift index");
  pauli_cmd->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (certify_cmd->parsed()) return cmd_certify(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (mub->parsed()) return cmd_mub(o, out, err);
    if (channel->parsed()) return cmd_channel(o, out, err);
    if (pauli_cmd->parsed()) return cmd_pauli(o, out);
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace umeb::cli
