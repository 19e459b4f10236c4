#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acx::cli {

/// Exit codes: 0 success, 1 computation refused or verification failed, 2 bad input.
enum ExitCode { kOk = 0, kRefused = 1, kInputError = 2 };

/// Runs the command line (args[0] is the program name); the report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acx::cli
