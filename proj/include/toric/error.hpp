#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NonSquare,
  MalformedFan,
  NonPrimitiveRay,
  DuplicateRay,
  DependentConeRays,
  NonMaximalCone,
  ConeOverlap,
  DanglingRay,
  IncompleteFan,
  IllFormedWeights,
  RayOutsideSupport,
  IndexOutOfRange,
  NotAWall,
  NonIntegerCoefficients,
  DimensionTooSmall,
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code; the
// CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
