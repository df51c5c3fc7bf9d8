#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modgin {

/// Exit codes of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInputError = 2 };

/// Runs the `modgin` command line. `args` excludes the program name. FILE
/// arguments that are absent or "-" read `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace modgin
