#include "mixmult/error.hpp"

namespace mixmult {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::TooManyCurves: return "TooManyCurves";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::SameIndex: return "SameIndex";
    case ErrorCode::InfiniteColength: return "InfiniteColength";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonPrimitiveTarget: return "NonPrimitiveTarget";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mixmult
