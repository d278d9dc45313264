#include "ddca/errors.hpp"

namespace ddca {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::PadTooSmall: return "PadTooSmall";
    case ErrorCode::InconsistentSamples: return "InconsistentSamples";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::FitValidationFailed: return "FitValidationFailed";
    case ErrorCode::NonTraceless: return "NonTraceless";
    case ErrorCode::IndexConstraintViolated: return "IndexConstraintViolated";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// 1 is reserved for "a verification ran and failed".
int exit_code(ErrorCode code) { return 10 + static_cast<int>(code); }

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ddca
