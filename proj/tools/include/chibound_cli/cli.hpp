#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chibound::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`; `in` backs the "-" input path.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace chibound::cli
