#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polygauss::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kBadInput = 2 };

/// Runs one command line (args excludes the program name). `threads_env` is
/// the value of POLYGAUSS_THREADS, or null when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* threads_env = nullptr);

}  // namespace polygauss::cli
