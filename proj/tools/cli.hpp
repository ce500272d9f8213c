#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsimplex::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kPreconditionError = 3,
  kBudgetError = 4,
  kOracleMismatch = 5,
};

/// Runs one subcommand. `args` excludes the program name. Failures print a
/// single `error code=... kind=... message="..."` line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsimplex::cli
