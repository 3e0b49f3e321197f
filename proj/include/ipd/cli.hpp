#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ipd::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kMismatch = 2, kCapExceeded = 3 };

/// Runs one subcommand. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ipd::cli
