#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace interlace {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotPsd,
  NotRealRooted,
  NotAboveRoots,
  PreconditionFail,
  HypothesisViolated,
  GuardExceeded,
  Parse,
  InterlacingViolation,
  MixedCharNotRealRooted,
  InternalInvariant,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers (and the CLI
/// exit-code mapping) which contract was broken.
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

}  // namespace interlace
