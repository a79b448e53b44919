#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace renitent::cli {

enum ExitCode : int {
  kPass = 0,
  kInputError = 2,
  kHypothesisRejected = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renitent::cli
