#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggp {

enum class ErrorCode {
  divide_by_zero,
  not_divisible,
  eval_at_zero,
  invalid_partition,
  basis_mismatch,
  missing_assignment,
  size_mismatch,
  degenerate_q,
  not_homogeneous,
  invalid_argument,
  parse_error,
  internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code identifies the
/// failed precondition; callers (the CLI in particular) dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ggp
