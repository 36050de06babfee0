#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unimod::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,        // usage, parse, or domain error
    kNotUnimodular = 3,
    kBudget = 4,
};

/// Runs the tool on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace unimod::cli
