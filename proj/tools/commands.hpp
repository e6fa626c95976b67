#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeab::cli {

enum ExitCode : int { kComputed = 0, kViolated = 1, kInputError = 2 };

// Runs one command line (args excludes the program name). Reports go to
// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeab::cli
