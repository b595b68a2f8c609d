#pragma once

#include <iosfwd>

namespace diffcyc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kInput = 3,
    kResourceLimit = 4,
};

/// Runs the diffcyc command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diffcyc::cli
