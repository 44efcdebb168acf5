#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polarity/sorts.hpp"

namespace polarity {

/// Exit codes of the command-line front end.
enum ExitCode : int { kHolds = 0, kFails = 1, kError = 2 };

/// Runs one `polarity` command. `args` excludes the program name. Reports go to
/// `out`, diagnostics and timings to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `R 1;11 , S d;1d` into a signature.
Signature parse_signature(const std::string& text);

}  // namespace polarity
