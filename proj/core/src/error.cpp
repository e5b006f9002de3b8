#include "ggp/error.hpp"

namespace ggp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::divide_by_zero: return "DivideByZero";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::eval_at_zero: return "EvalAtZero";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::missing_assignment: return "MissingAssignment";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::degenerate_q: return "DegenerateQ";
    case ErrorCode::not_homogeneous: return "NotHomogeneous";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ggp
