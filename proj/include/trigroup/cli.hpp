#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigroup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDefect = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

/// Runs one subcommand. JSON goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 2 on invalid input, 3 when a resource cap is hit,
/// 1 when an exact identity that must hold is found to fail.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigroup::cli
