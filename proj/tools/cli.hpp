#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsageOrParse = 2,
  kUnsupportedLabel = 3,
  kRankCap = 4,
  kCycleBudget = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxlab::cli
