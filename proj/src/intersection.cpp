#include "toric/intersection.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

bool satisfies_class_relation(const Fan& fan, const CurveClass& curve) {
  if (curve.intersections.size() != fan.num_rays()) return false;
  for (std::size_t i = 0; i < fan.dim(); ++i) {
    Rat s = 0;
    for (std::size_t r = 0; r < fan.num_rays(); ++r) s += curve.intersections[r] * fan.ray(r)[i];
    if (s != 0) return false;
  }
  return true;
}

bool positively_proportional(const CurveClass& a, const CurveClass& b) {
  if (a.intersections.size() != b.intersections.size()) return false;
  std::optional<Rat> t;
  for (std::size_t i = 0; i < a.intersections.size(); ++i) {
    const Rat& x = a.intersections[i];
    const Rat& y = b.intersections[i];
    if (y == 0) {
      if (x != 0) return false;
      continue;
    }
    Rat q = x / y;
    if (q <= 0 || (t && *t != q)) return false;
    t = q;
  }
  return t.has_value();
}

Rat intersect(const InvariantDivisor& divisor, const CurveClass& curve) {
  if (divisor.coefficients.size() != curve.intersections.size())
    throw Error(ErrorCode::DimensionMismatch, "divisor and curve class lengths differ");
  Rat s = 0;
  for (std::size_t i = 0; i < curve.intersections.size(); ++i) s += divisor.coefficients[i] * curve.intersections[i];
  return s;
}

CurveClass wall_curve_class(const Fan& fan, const Wall& wall) {
  const auto all = walls(fan);
  if (std::find(all.begin(), all.end(), wall) == all.end())
    throw Error(ErrorCode::NotAWall, "index set is not a facet shared by the two listed cones");

  const std::size_t n = fan.dim();
  std::vector<std::size_t> cols{wall.opposite[0], wall.opposite[1]};
  cols.insert(cols.end(), wall.rays.begin(), wall.rays.end());
  IntMatrix m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = fan.ray(cols[c])[r];
  const auto kernel = kernel_basis(m);
  if (kernel.size() != 1 || kernel[0][0] == 0 || kernel[0][1] == 0 || sgn(kernel[0][0]) != sgn(kernel[0][1]))
    throw Error(ErrorCode::Internal, "wall relation is not one-dimensional with opposite rays on both sides");

  const Integer wall_mult = cone_multiplicity(fan, wall.rays);
  const Rat c0 = Rat(wall_mult) / Rat(cone_multiplicity(fan, fan.max_cones()[wall.cones[0]]));
  const Rat c1 = Rat(wall_mult) / Rat(cone_multiplicity(fan, fan.max_cones()[wall.cones[1]]));
  const Rat scale = c1 / kernel[0][1];
  if (kernel[0][0] * scale != c0)
    throw Error(ErrorCode::Internal, "wall relation disagrees with the multiplicity normalization");

  CurveClass curve{RatVec(fan.num_rays(), Rat(0))};
  for (std::size_t c = 0; c < cols.size(); ++c) curve.intersections[cols[c]] = kernel[0][c] * scale;
  return curve;
}

CurveClass wall_curve_class(const Fan& fan, const Cone& wall_rays) {
  Cone sorted(wall_rays);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : walls(fan))
    if (w.rays == sorted) return wall_curve_class(fan, w);
  throw Error(ErrorCode::NotAWall, "no wall with the given rays");
}

std::vector<std::pair<Wall, CurveClass>> all_wall_curves(const Fan& fan) {
  std::vector<std::pair<Wall, CurveClass>> out;
  for (auto& w : walls(fan)) {
    auto c = wall_curve_class(fan, w);
    out.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

CurveClass relation_curve_class(const Fan& fan, const PositiveRelation& rel) {
  for (const auto& a : rel.coefficients)
    if (!is_integral(a)) throw Error(ErrorCode::NonIntegerCoefficients, "relation coefficients must be integers");
  if (!verify_relation(fan, rel)) throw Error(ErrorCode::InvalidArgument, "not a positive relation among the rays");
  CurveClass curve{RatVec(fan.num_rays(), Rat(0))};
  for (std::size_t i = 0; i < rel.indices.size(); ++i) curve.intersections[rel.indices[i]] = rel.coefficients[i];
  return curve;
}

NefReport is_nef(const Fan& fan, const InvariantDivisor& divisor) {
  if (!is_complete(fan)) throw Error(ErrorCode::IncompleteFan, "nefness is decided on complete fans");
  if (divisor.coefficients.size() != fan.num_rays())
    throw Error(ErrorCode::DimensionMismatch, "divisor needs one coefficient per ray");
  for (auto& [wall, curve] : all_wall_curves(fan)) {
    Rat d = intersect(divisor, curve);
    if (d < 0) return {false, std::move(wall), std::move(d)};
  }
  return {};
}

std::string_view to_string(DivisorSign sign) noexcept {
  return sign == DivisorSign::NonNegative ? "non_negative" : "negative_infinity";
}

DivisorSign divisor_seshadri_sign_at_identity(const Fan& fan, const InvariantDivisor& divisor) {
  if (fan.dim() < 2)
    throw Error(ErrorCode::DimensionTooSmall, "on curves the Seshadri constant is a finite degree");
  return is_nef(fan, divisor).nef ? DivisorSign::NonNegative : DivisorSign::NegativeInfinity;
}

}  // namespace toric
