#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdual::cli {

/// Exit codes of the kdual tool.
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kParseError = 2,
  kWindowNotCertifiable = 3,
  kVerdictFail = 4,
  kHypothesisViolation = 5,
};

/// Runs one invocation; args excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdual::cli
