#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dbatk {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2, kExitCap = 3 };

/// Runs the command line (arguments without the program name) and returns
/// the process exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbatk
