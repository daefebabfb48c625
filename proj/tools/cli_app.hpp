#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kuttaka::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // selftest or bench found a failure
inline constexpr int kExitNoSolution = 2;   // domain error: no answer exists
inline constexpr int kExitUsage = 3;        // usage, parse or overflow error

/// Runs the command line given as arguments (program name excluded) and
/// returns the process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuttaka::cli
