#pragma once

#include <ostream>

namespace ggp::cli {

// Process exit status contract of the ggp tool.
enum ExitCode : int {
  kSuccess = 0,
  kIdentityFailure = 1,
  kArgumentError = 2,
  kParseError = 3,
  kDegenerateQ = 4,
  kNotHomogeneous = 5,
  kIoError = 6,
  kInternalError = 7,
};

/// Runs the command line `argv` and returns the exit status. Normal output
/// goes to `out` (unless --out redirects it), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ggp::cli
