#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g1chow::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g1chow::cli
