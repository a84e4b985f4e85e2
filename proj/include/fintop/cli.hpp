#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fintop::cli {

/// Exit codes of the command-line front end.
enum Exit : int { ok = 0, violation = 1, input_error = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop::cli
