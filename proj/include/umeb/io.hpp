#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "umeb/basis.hpp"

namespace umeb::io {

inline constexpr const char* kStateFormat = "umeb-state/1";
inline constexpr const char* kBasisFormat = "umeb-basis/1";

/// Malformed or unreadable state/basis file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Norms within kNormExact of 1 are taken as-is, within kNormAccept they are
// renormalized with a warning, beyond that the file is rejected.
inline constexpr double kNormExact = 1e-9;
inline constexpr double kNormAccept = 1e-6;
inline constexpr double kOrthonormalAccept = 1e-6;

enum class LoadMode {
  Strict,         // also require pairwise orthonormality within kOrthonormalAccept
  StructureOnly,  // shape, tag, dimensions and norms only
};

nlohmann::json amplitudes_to_json(const ComplexVector& v);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

nlohmann::json state_to_json(const BipartiteState& psi);
BipartiteState state_from_json(const nlohmann::json& j, std::ostream* warnings = nullptr);

nlohmann::json basis_to_json(const BasisSet& basis);
BasisSet basis_from_json(const nlohmann::json& j, LoadMode mode = LoadMode::Strict,
                         std::ostream* warnings = nullptr);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

inline void write_basis_file(const std::string& path, const BasisSet& basis) {
  write_json_file(path, basis_to_json(basis));
}
inline BasisSet read_basis_file(const std::string& path, LoadMode mode = LoadMode::Strict,
                                std::ostream* warnings = nullptr) {
  return basis_from_json(read_json_file(path), mode, warnings);
}
inline void write_state_file(const std::string& path, const BipartiteState& psi) {
  write_json_file(path, state_to_json(psi));
}
inline BipartiteState read_state_file(const std::string& path, std::ostream* warnings = nullptr) {
  return state_from_json(read_json_file(path), warnings);
}

}  // namespace umeb::io
