#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skl {

enum class ErrorCode {
  // invalid input
  SyntaxError,
  UnknownVariable,
  RingMismatch,
  DimensionMismatch,
  ConstantInput,
  OutOfRange,
  InvalidInput,
  // unsupported instance
  NotIsolated,
  NotSQH,
  NotASurface,
  DimensionTooSmall,
  NotLCI,
  BudgetExceeded,
  // internal soundness failures
  InexactDivision,
  PathDisagreement,
  InconsistentInputs,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::NotSQH: return "NotSQH";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotLCI: return "NotLCI";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::PathDisagreement: return "PathDisagreement";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Process exit status for an error: 1 invalid input, 2 unsupported instance,
/// 3 internal soundness failure.
inline int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::RingMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ConstantInput:
    case ErrorCode::OutOfRange:
    case ErrorCode::InvalidInput:
      return 1;
    case ErrorCode::NotIsolated:
    case ErrorCode::NotSQH:
    case ErrorCode::NotASurface:
    case ErrorCode::DimensionTooSmall:
    case ErrorCode::NotLCI:
    case ErrorCode::BudgetExceeded:
      return 2;
    case ErrorCode::InexactDivision:
    case ErrorCode::PathDisagreement:
    case ErrorCode::InconsistentInputs:
      return 3;
  }
  return 3;
}

}  // namespace skl
