#pragma once

// Command-line driver, factored out of main() so the whole surface —
// argument handling, config files, output formats, exit codes — is testable
// in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace tcheeger::cli {

// Exit codes of the driver.
inline constexpr int kOk = 0;           // success, all checks passed
inline constexpr int kVerifyFailed = 1; // verify ran but some claim failed
inline constexpr int kUsageError = 2;   // bad flags, bad q-window, unknown claim
inline constexpr int kSolverError = 3;  // bracket/scan invariant failure
inline constexpr int kIoError = 4;      // output path not writable

// Runs the tool on `args` (without the program name); normal output goes to
// `out`, diagnostics to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tcheeger::cli
