#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlfiber::cli {

/// Exit codes of run().
enum Exit : int { kOk = 0, kFalse = 1, kInputError = 2, kMathError = 3 };

/// Parses `args` (without the program name), dispatches one subcommand and
/// writes its JSON result to `out` (or the --out file). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlfiber::cli
