#pragma once

// Intersection numbers of torus-invariant curves with the invariant prime
// divisors D_rho, nefness of invariant Q-divisors, and the sign dichotomy of
// the Seshadri constant of an invariant divisor at the identity.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/positivity.hpp"

namespace toric {

struct InvariantDivisor {
  RatVec coefficients;  // one per ray
};

struct CurveClass {
  RatVec intersections;  // C . D_rho, one per ray

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// sum_rho (C . D_rho) v_rho == 0.
bool satisfies_class_relation(const Fan& fan, const CurveClass& curve);

/// True if a == t * b for some rational t > 0.
bool positively_proportional(const CurveClass& a, const CurveClass& b);

Rat intersect(const InvariantDivisor& divisor, const CurveClass& curve);

/// Curve of the wall: the relation c v + c' v' + sum b_i u_i = 0 between the
/// two opposite rays and the wall rays, scaled so that
/// c' = mult(wall) / mult(cone containing v') (and then c = mult(wall) /
/// mult(cone containing v)). Throws Error(NotAWall).
CurveClass wall_curve_class(const Fan& fan, const Wall& wall);
CurveClass wall_curve_class(const Fan& fan, const Cone& wall_rays);

std::vector<std::pair<Wall, CurveClass>> all_wall_curves(const Fan& fan);

/// The curve class of a positive integral relation: C . D_rho equals the
/// relation's coefficient on rho and zero elsewhere. Throws
/// Error(NonIntegerCoefficients) or Error(InvalidArgument) if the relation
/// does not hold.
CurveClass relation_curve_class(const Fan& fan, const PositiveRelation& rel);

struct NefReport {
  bool nef = true;
  std::optional<Wall> witness;  // first wall curve with negative degree
  Rat value;                    // degree on the witness
};

/// Toric Kleiman: nef iff non-negative on every wall curve. Throws
/// Error(IncompleteFan) or Error(DimensionMismatch).
NefReport is_nef(const Fan& fan, const InvariantDivisor& divisor);

enum class DivisorSign { NonNegative, NegativeInfinity };

std::string_view to_string(DivisorSign sign) noexcept;

/// NegativeInfinity iff the divisor is not nef. Throws
/// Error(DimensionTooSmall) when n < 2.
DivisorSign divisor_seshadri_sign_at_identity(const Fan& fan, const InvariantDivisor& divisor);

}  // namespace toric
