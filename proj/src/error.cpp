#include "dessinkit/error.hpp"

namespace dessinkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NonIntegralCharacteristic: return "NonIntegralCharacteristic";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::IrrationalCriticalPoints: return "IrrationalCriticalPoints";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::IsPthPower: return "IsPthPower";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) noexcept {
  return code == ErrorCode::ResourceLimit || code == ErrorCode::SizeGuard ||
         code == ErrorCode::Cancelled;
}

}  // namespace dessinkit
