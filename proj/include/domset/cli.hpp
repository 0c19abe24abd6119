#pragma once

#include <ostream>
#include <span>
#include <string>

namespace domset {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitSizeLimit = 4;

/// Runs one CLI invocation; `args` excludes the program name. Reports go to
/// `out`, one-line diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace domset
