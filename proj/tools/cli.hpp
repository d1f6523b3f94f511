#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtk::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, usage_error = 1, consistency_failure = 2 };

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dtk::cli
