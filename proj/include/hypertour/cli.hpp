#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertour {

/// Exit statuses of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypertour
