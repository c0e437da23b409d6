#include "fatlie/errors.hpp"

namespace fatlie {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NonMinimalPresentation: return "NonMinimalPresentation";
    case ErrorCode::ConstantUnitIdeal: return "ConstantUnitIdeal";
    case ErrorCode::DimensionBound: return "DimensionBound";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fatlie
