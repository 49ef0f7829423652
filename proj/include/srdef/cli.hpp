#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srdef {

/// Exit codes of the command-line tool.
enum ExitStatus : int { exit_ok = 0, exit_error = 1, exit_verification_failed = 2 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srdef
