#pragma once

#include <iosfwd>

namespace fujimoto {

inline constexpr const char* kToolName = "fujimoto";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses and runs one command. Reports go to `out` (or the --output file);
/// diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fujimoto
