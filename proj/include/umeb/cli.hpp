#pragma once

#include <iosfwd>

namespace umeb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInconclusive = 3;

/// Entry point of the `umeb` tool. Machine-readable output (--json) goes to
/// `out` only; warnings and errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace umeb::cli
