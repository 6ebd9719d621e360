#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subspace_sets::cli {

/// Exit codes of the `subspace-sets` command.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDataError = 3,
  kNumericalFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace subspace_sets::cli
