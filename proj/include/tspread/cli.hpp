#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tspread::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kUsage = 2,
    kDomain = 3,
    kPartial = 4,
};

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspread::cli
