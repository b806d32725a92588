#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdq::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArguments = 2,
  kUnsupportedOrder = 3,
  kBudgetExceeded = 4,
};

/// Environment variable that overrides the default `--max-steps`.
inline constexpr const char* kBudgetEnv = "HDQ_MAX_STEPS";

/// Runs `hdq` with `args` (not including the program name).  Data goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdq::cli
