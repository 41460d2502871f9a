#pragma once

#include <iosfwd>

namespace klsum::cli {

/// Exit codes of the front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailed = 1,
  kExitUsage = 2,
  kExitScale = 3,
};

/// Runs `compute`, `verify` or `sweep` with the given argument vector.
/// Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klsum::cli
