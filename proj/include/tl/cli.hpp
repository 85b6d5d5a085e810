#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tl {

// Exit codes, stable across releases.
enum ExitStatus : int {
    kExitOk = 0,
    kExitValidation = 1, // bad config / input files
    kExitProvider = 2,   // transport / provider failure
    kExitInternal = 3,
};

/// Full command dispatch; tools/tl_main.cpp is a thin wrapper. Human output
/// goes to out, diagnostics to err; machine JSON only ever goes to files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tl
