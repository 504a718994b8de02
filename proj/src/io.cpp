#include "umeb/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace umeb::io {

using nlohmann::json;

json amplitudes_to_json(const ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back({v(k).real(), v(k).imag()});
  return arr;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

int read_dim(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing or non-integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

void check_format(const json& j, const char* tag) {
  if (!j.is_object()) throw FormatError("top-level value must be an object");
  if (!j.contains("format") || !j.at("format").is_string() || j.at("format").get<std::string>() != tag) {
    throw FormatError(std::string("format tag must be \"") + tag + "\"");
  }
}

ComplexVector parse_amplitudes(const json& arr, Eigen::Index expected, const std::string& where) {
  if (!arr.is_array()) throw FormatError(where + ": amplitudes must be an array");
  if (static_cast<Eigen::Index>(arr.size()) != expected) {
    std::ostringstream msg;
    msg << where << ": expected " << expected << " amplitudes, got " << arr.size();
    throw FormatError(msg.str());
  }
  ComplexVector v(expected);
  for (Eigen::Index k = 0; k < expected; ++k) {
    const json& pair = arr[static_cast<std::size_t>(k)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw FormatError(where + ": each amplitude must be a [real, imaginary] pair");
    }
    v(k) = Complex(pair[0].get<double>(), pair[1].get<double>());
    if (!std::isfinite(v(k).real()) || !std::isfinite(v(k).imag())) {
      throw FormatError(where + ": non-finite amplitude");
    }
  }
  return v;
}

BipartiteState make_state(int d, int dprime, ComplexVector v, const std::string& where, std::ostream* warnings) {
  const double norm = v.norm();
  const double err = std::abs(norm - 1.0);
  if (err > kNormAccept) {
    std::ostringstream msg;
    msg << where << ": norm " << norm << " is too far from 1";
    throw FormatError(msg.str());
  }
  if (err > kNormExact) {
    if (warnings) *warnings << "warning: " << where << ": norm " << norm << " renormalized\n";
    v /= norm;
  }
  return BipartiteState(d, dprime, std::move(v));
}

void check_dims(int d, int dprime) {
  if (d < 2 || dprime < d) {
    std::ostringstream msg;
    msg << "dimensions must satisfy 2 <= d <= dprime, got d=" << d << " dprime=" << dprime;
    throw FormatError(msg.str());
  }
}

}  // namespace

json state_to_json(const BipartiteState& psi) {
  return {{"format", kStateFormat},
          {"d", psi.d()},
          {"dprime", psi.dprime()},
          {"amplitudes", amplitudes_to_json(psi.amplitudes())}};
}

BipartiteState state_from_json(const json& j, std::ostream* warnings) {
  check_format(j, kStateFormat);
  const int d = read_dim(j, "d");
  const int dprime = read_dim(j, "dprime");
  check_dims(d, dprime);
  if (!j.contains("amplitudes")) throw FormatError("missing field 'amplitudes'");
  return make_state(d, dprime, parse_amplitudes(j.at("amplitudes"), Eigen::Index{d} * dprime, "state"), "state",
                    warnings);
}

json basis_to_json(const BasisSet& basis) {
  json states = json::array();
  for (const auto& s : basis.states()) states.push_back(amplitudes_to_json(s.amplitudes()));
  json j = {{"format", kBasisFormat}, {"d", basis.d()}, {"dprime", basis.dprime()}, {"states", std::move(states)}};
  if (!basis.labels().empty()) j["labels"] = basis.labels();
  j["me_flags"] = basis.me_flags();
  return j;
}

BasisSet basis_from_json(const json& j, LoadMode mode, std::ostream* warnings) {
  check_format(j, kBasisFormat);
  const int d = read_dim(j, "d");
  const int dprime = read_dim(j, "dprime");
  check_dims(d, dprime);
  if (!j.contains("states") || !j.at("states").is_array()) throw FormatError("missing array field 'states'");

  std::vector<BipartiteState> states;
  const json& arr = j.at("states");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "state " + std::to_string(k);
    states.push_back(make_state(d, dprime, parse_amplitudes(arr[k], Eigen::Index{d} * dprime, where), where, warnings));
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_array() || l.size() != states.size()) throw FormatError("'labels' must have one entry per state");
    for (const auto& e : l) {
      if (!e.is_string()) throw FormatError("labels must be strings");
      labels.push_back(e.get<std::string>());
    }
  }
  std::optional<std::vector<bool>> flags;
  if (j.contains("me_flags")) {
    const json& f = j.at("me_flags");
    if (!f.is_array() || f.size() != states.size()) throw FormatError("'me_flags' must have one entry per state");
    flags.emplace();
    for (const auto& e : f) {
      if (!e.is_boolean()) throw FormatError("me_flags must be booleans");
      flags->push_back(e.get<bool>());
    }
  }

  BasisSet basis(d, dprime, std::move(states), std::move(labels), std::move(flags));
  if (mode == LoadMode::Strict && gram_deviation(basis) > kOrthonormalAccept) {
    std::ostringstream msg;
    msg << "states are not orthonormal (Gram deviation " << gram_deviation(basis) << ")";
    throw FormatError(msg.str());
  }
  return basis;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
  if (!f) throw FormatError("failed writing '" + path + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace umeb::io
