#pragma once

#include <stdexcept>
#include <string>

namespace ddca {

/// Failure categories raised by the engine. The CLI maps each one to a
/// distinct process exit code (see exit_code()).
enum class ErrorCode {
  IndexOutOfRange,
  EqualIndices,
  ParamMismatch,
  ZeroElement,
  PadTooSmall,
  InconsistentSamples,
  NotInSpan,
  DegreeBoundExceeded,
  FitValidationFailed,
  NonTraceless,
  IndexConstraintViolated,
  TruncationOverflow,
  NotSymmetric,
  CacheCorrupt,
  ParseError,
  InvalidArgument,
};

const char* error_name(ErrorCode code);
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ddca
