#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicol::cli {

enum ExitCode : int {
    Success = 0,
    VerificationFailed = 1,
    UsageError = 2,
    PreconditionFailed = 3,
};

/// Runs one command line (args excludes the program name). Machine-readable
/// key=value lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dicol::cli
