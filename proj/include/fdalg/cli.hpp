#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdalg {

/// Exit codes: property holds / command succeeded, property fails (witness
/// printed), bad input or usage.
enum ExitCode : int { exit_ok = 0, exit_fails = 1, exit_input = 2 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fdalg
