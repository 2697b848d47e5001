#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfa {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitUnknown = 2 };

/// Runs one tool invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfa
