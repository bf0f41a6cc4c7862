#pragma once

#include <iosfwd>

namespace lindlehmer::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// Parses argv and runs one subcommand, writing JSON lines to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lindlehmer::cli
