#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipr {

/// Exit codes: 0 the checked property holds (or the expected outcome
/// occurred), 1 it fails, 2 usage or I/O error.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs the `iprcheck` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ipr
