#pragma once

// Simplicial fans: representation, validation, classification predicates,
// class group, and the generator families used throughout the project.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/exact_math.hpp"
#include "toric/lp.hpp"

namespace toric {

/// Sorted ray-index set. Every subset of a simplicial cone's generators spans
/// a face, so cones are identified with their index sets.
using Cone = std::vector<std::size_t>;

class Fan {
 public:
  /// Structural checks only: ray lengths equal dim, cone indices in range,
  /// no repeated index within a cone. Cone index sets are sorted. Throws
  /// Error(MalformedFan). Use validate_fan for the geometric invariants.
  Fan(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> max_cones);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  const std::vector<IntVec>& rays() const noexcept { return rays_; }
  const IntVec& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const noexcept { return cones_; }

  /// Rows are the generators of `cone`.
  IntMatrix cone_matrix(const Cone& cone) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t dim_;
  std::vector<IntVec> rays_;
  std::vector<Cone> cones_;
};

struct ValidationReport {
  bool valid = true;
  std::optional<ErrorCode> error;
  std::vector<std::size_t> cones;  // offending max-cone indices
  std::optional<std::size_t> ray;  // offending ray index
  std::string message;
  /// Cone pairs whose face condition was certified by a separating functional.
  std::size_t pairs_certified = 0;
};

ValidationReport validate_fan(const Fan& fan);

/// Throws Error with the report's code when validation fails.
void require_valid(const Fan& fan);

/// The exact separating functional w for two max cones: w = 0 on shared rays,
/// w >= 1 on the rest of a, w <= -1 on the rest of b. nullopt if none exists.
std::optional<RatVec> separating_functional(const Fan& fan, std::size_t a, std::size_t b);

struct Wall {
  Cone rays;                       // n-1 shared generators
  std::size_t cones[2] = {0, 0};   // adjacent max-cone indices, ascending
  std::size_t opposite[2] = {0, 0};  // ray of cones[k] not on the wall

  friend bool operator==(const Wall&, const Wall&) = default;
};

struct CompletenessReport {
  bool complete = false;
  std::optional<std::size_t> non_full_cone;  // a max cone of dimension < n
  std::optional<Cone> open_facet;            // facet not shared by exactly two cones
  bool disconnected = false;
};

CompletenessReport check_completeness(const Fan& fan);
bool is_complete(const Fan& fan);

/// All facets shared by exactly two full-dimensional max cones, sorted by
/// index set.
std::vector<Wall> walls(const Fan& fan);

Integer cone_multiplicity(const Fan& fan, const Cone& cone);

struct SmoothnessReport {
  bool smooth = true;
  std::vector<Integer> multiplicities;  // one per max cone
};

SmoothnessReport check_smoothness(const Fan& fan);
bool is_smooth(const Fan& fan);

struct ProjectivityReport {
  bool projective = false;
  /// One linear functional per max cone when projective.
  std::vector<RatVec> support_function;
  /// The LP behind the decision and its certificate (a Farkas vector when
  /// not projective).
  std::optional<lp::LPProblem> problem;
  lp::LPCertificate certificate;
};

/// Throws Error(IncompleteFan).
ProjectivityReport check_projectivity(const Fan& fan);

/// Direct substitution: functionals agree on every wall's rays and differ by
/// at least one on both opposite rays, with the functional of the other cone
/// larger.
bool verify_support_function(const Fan& fan, const std::vector<RatVec>& support_function);

struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

/// Cokernel of M -> Z^rays, m -> (<m, v_rho>). Throws Error(IncompleteFan).
ClassGroup class_group(const Fan& fan);

// Generators.
Fan projective_space(std::size_t n);
/// Throws Error(IllFormedWeights) unless all weights are positive and every
/// n of the n+1 weights are coprime.
Fan weighted_projective_space(const std::vector<Integer>& weights);
Fan hirzebruch(long r);
Fan product(const Fan& a, const Fan& b);
/// Inserts the primitive vector v as a new last ray, replacing every max
/// cone containing the cone whose relative interior holds v. Throws
/// Error(RayOutsideSupport) or Error(InvalidArgument) when v is zero,
/// non-primitive, or already a ray.
Fan star_subdivision(const Fan& fan, const IntVec& v);

/// The smallest cone (as a subset of some max cone) whose relative
/// interior contains x; nullopt if x is outside the support.
std::optional<Cone> carrier_cone(const Fan& fan, const IntVec& x);

/// Decides whether some unimodular map carries the rays of a bijectively onto
/// the rays of b, matching cones. Brute force over ray bijections.
bool lattice_isomorphic(const Fan& a, const Fan& b);

}  // namespace toric
