#include "grlab/errors.hpp"

namespace grlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::PrecisionSuspect: return "PrecisionSuspect";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::NotAReduction: return "NotAReduction";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

}  // namespace grlab
