#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::DependentConeRays: return "DependentConeRays";
    case ErrorCode::NonMaximalCone: return "NonMaximalCone";
    case ErrorCode::ConeOverlap: return "ConeOverlap";
    case ErrorCode::DanglingRay: return "DanglingRay";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::IllFormedWeights: return "IllFormedWeights";
    case ErrorCode::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAWall: return "NotAWall";
    case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace toric
