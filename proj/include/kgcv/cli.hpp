#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgcv::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kDomain = 2,
    kVerification = 3,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Normal output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kgcv::cli
