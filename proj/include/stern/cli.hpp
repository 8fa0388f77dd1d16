#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diatomic::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `stern <args...>` (program name excluded), writing
/// results to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diatomic::cli
