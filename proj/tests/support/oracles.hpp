#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not go
// through the library code it is used to check.

#include <optional>
#include <random>
#include <vector>

#include "toric/fan.hpp"
#include "toric/positivity.hpp"

namespace oracle {

using toric::Cone;
using toric::Fan;
using toric::IntMatrix;
using toric::Integer;
using toric::IntVec;
using toric::Rat;
using toric::RatVec;

/// Laplace expansion along the first row.
Integer cofactor_determinant(const IntMatrix& m);

/// gcd of all k x k minors, by cofactor expansion (0 if all vanish).
Integer determinantal_divisor(const IntMatrix& m, std::size_t k);

/// Ray subsets carrying a positive relation with exactly that support and
/// whose proper subsets are independent; coefficients from an LP point,
/// scaled so the smallest is 1. Same ordering as the library (size, colex).
std::vector<toric::PositiveRelation> brute_force_positive_circuits(const Fan& fan, std::size_t max_support);

/// All ray subsets B that are not faces while every B minus one ray is.
std::vector<Cone> brute_force_primitive_collections(const Fan& fan);

/// Shoots `samples` random integer directions and decides membership in the
/// full-dimensional max cones by Cramer's rule. True iff every direction is
/// covered.
bool monte_carlo_complete(const Fan& fan, std::size_t samples, std::uint64_t seed);

}  // namespace oracle
