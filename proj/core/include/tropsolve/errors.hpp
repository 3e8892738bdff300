#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropsolve {

enum class ErrorCode {
  BalancedSum,
  DimensionMismatch,
  NotGeneric,
  SizeLimit,
  MultipleCandidates,
  NoUniqueMin,
  InvariantViolation,
  CycleDetected,
  TiedPayoff,
  MissingArc,
  InvalidGame,
  IndexOutOfRange,
  IdenticallyZero,
  ParseError,
  ArgError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// CLI reports in its machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tropsolve
