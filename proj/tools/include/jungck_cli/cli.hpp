#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jungck::cli {

/// Exit codes: 0 success or verified, 2 counterexample or not verified, 1 error.
enum ExitCode : int { kSuccess = 0, kError = 1, kRefuted = 2 };

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jungck::cli
