#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrs::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kSingular = 3,
  kMaxSteps = 4,
  kCountMismatch = 5,
};

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrs::cli
