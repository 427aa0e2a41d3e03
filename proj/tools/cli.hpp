#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twual {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kBudget = 2,
  kVerification = 3,
};

/// Runs the command line `args` (without the program name). Payload goes to
/// `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twual
