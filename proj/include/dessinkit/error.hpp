#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dessinkit {

enum class ErrorCode {
  SyntaxError,
  RepeatedPoint,
  PointOutOfRange,
  DegreeMismatch,
  ResourceLimit,
  Cancelled,
  NotTransitive,
  NonIntegralCharacteristic,
  NotCoprime,
  SizeGuard,
  Indeterminate,
  IrrationalCriticalPoints,
  OutOfRange,
  DivisionByZero,
  FieldMismatch,
  NotAUnit,
  IsPthPower,
  DegenerateTriple,
  BadShape,
  HypothesisFailed,
  IoError,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// True for codes the CLI reports as resource exhaustion (exit 3) rather than input errors.
bool is_resource_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace dessinkit
