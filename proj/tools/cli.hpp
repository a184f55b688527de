#pragma once

#include <ostream>

namespace posetdist::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kValidationFailure = 2,
  kInputError = 3,
  kSolverDisagreement = 4,
  kResourceLimit = 5,
  kUsageError = 64,
};

/// Runs one command line. All output goes to `out` and `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posetdist::cli
