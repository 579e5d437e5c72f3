#pragma once

// Positive circuits, condition (dagger), primitive collections and the sign
// of the tangent Seshadri constant at the identity of the torus.
//
// (dagger): every vanishing positive combination of distinct ray generators
// uses at least n+1 of them. On a complete simplicial fan the tangent sheaf
// has positive Seshadri constant at the identity exactly when (dagger) holds,
// and the constant is never negative there.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct PositiveRelation {
  Cone indices;         // sorted, distinct
  RatVec coefficients;  // strictly positive, aligned with indices

  friend bool operator==(const PositiveRelation&, const PositiveRelation&) = default;
};

/// sum a_i v_i == 0 exactly, every a_i > 0, indices sorted and distinct.
bool verify_relation(const Fan& fan, const PositiveRelation& rel);

struct DaggerReport {
  bool holds = true;
  std::optional<PositiveRelation> witness;  // present iff !holds
};

/// Throws Error(IndexOutOfRange).
bool spans_cone(const Fan& fan, const Cone& rays);

/// Inclusion-minimal ray sets of size <= max_support carrying an all-positive
/// dependence, coefficients scaled so the smallest is 1. Ordered by size,
/// then colexicographically (compare largest index first).
std::vector<PositiveRelation> positive_circuits(const Fan& fan, std::size_t max_support);

/// Circuit enumeration. The witness is the first positive circuit of support
/// <= n in the order above. Throws Error(IncompleteFan).
DaggerReport check_dagger(const Fan& fan);

/// Independent route: one LP per ray subset of size <= n (same order),
/// asking for a_i >= 1 with sum a_i v_i = 0. Throws Error(IncompleteFan).
DaggerReport check_dagger_by_lp(const Fan& fan);

/// Minimal non-faces of the cone complex, sorted lexicographically.
std::vector<Cone> primitive_collections(const Fan& fan);

/// First primitive collection whose rays sum to zero, by size then colex
/// (the order of positive_circuits).
std::optional<Cone> find_zero_sum_primitive_collection(const Fan& fan);

/// n+1 rays, smooth, complete, and every n-subset of rays a max cone.
bool is_projective_space_fan(const Fan& fan);

/// No negative value exists: the constant is non-negative at the identity.
enum class TangentSign { Zero, Positive };

std::string_view to_string(TangentSign sign) noexcept;

/// Throws Error(IncompleteFan).
TangentSign tangent_seshadri_sign_at_identity(const Fan& fan);

struct Theorem1Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Theorem1Report {
  enum class Status { Pass, Fail, NotApplicable };
  Status status = Status::NotApplicable;
  std::string reason;  // why not applicable
  std::optional<TangentSign> sign;
  bool projective_space = false;
  std::optional<Cone> zero_sum_collection;
  std::vector<Theorem1Check> checks;
};

std::string_view to_string(Theorem1Report::Status status) noexcept;

/// On smooth projective complete fans: the sign is Positive exactly for the
/// projective-space fan, and a zero-sum primitive collection exists.
Theorem1Report verify_theorem1(const Fan& fan);

struct NamedFan {
  std::string name;
  Fan fan;
};

struct ScanEntry {
  std::string name;
  bool complete = false;
  bool smooth = false;
  std::optional<bool> projective;  // complete fans only
  std::optional<bool> dagger_holds;
  bool projective_space = false;
  bool finding = false;
};

struct MutationStats {
  std::size_t candidates = 0;
  std::size_t too_high = 0;  // subdivision point exceeded the height bound
  std::size_t smooth = 0;
  std::size_t dagger_holds = 0;
  std::size_t projective_space = 0;
};

struct ScanFinding {
  std::string origin;
  Fan fan;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  MutationStats mutation;
  std::vector<ScanFinding> findings;
};

struct ScanOptions {
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  long max_height = 5;            // sup-norm bound on subdivision points
  std::size_t max_rays = 12;      // mutants above this are not reused as seeds
  std::size_t max_pool = 256;
};

/// Looks for smooth complete fans other than projective space that satisfy
/// (dagger): classifies every corpus fan, then star-subdivides smooth complete
/// corpus fans at random interior lattice points of their cones, `budget`
/// times, with a seeded generator.
ScanReport question4_scan(const std::vector<NamedFan>& corpus, const ScanOptions& options);

}  // namespace toric
