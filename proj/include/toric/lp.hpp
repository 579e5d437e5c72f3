#pragma once

// Exact rational simplex (two-phase, Bland's rule) with checkable
// certificates.
//
// A problem is  A x (sense) b  with per-variable lower bounds (absent bound =
// free variable). Feasibility answers come with either a point or a Farkas
// vector y such that, writing c = A^T y:
//   y_i >= 0 on >= rows, y_i <= 0 on <= rows, y_i free on = rows,
//   c_j == 0 on free variables, c_j <= 0 on bounded variables,
//   sum_j c_j l_j < y^T b.
// Any feasible x would give y^T b <= y^T A x = c^T x <= c^T l, so such a y
// proves infeasibility.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/exact_math.hpp"

namespace toric::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };
enum class Goal { Maximize, Minimize };

class LPProblem {
 public:
  explicit LPProblem(std::size_t num_vars) : lower_(num_vars) {}

  std::size_t num_vars() const noexcept { return lower_.size(); }
  std::size_t num_rows() const noexcept { return rows_.size(); }

  /// Throws Error(DimensionMismatch) if coeffs.size() != num_vars().
  void add_constraint(RatVec coeffs, Sense sense, Rat rhs);
  void set_lower_bound(std::size_t var, Rat bound);
  void set_free(std::size_t var);
  void set_objective(RatVec coeffs, Goal goal);

  const std::vector<RatVec>& rows() const noexcept { return rows_; }
  const RatVec& rhs() const noexcept { return rhs_; }
  const std::vector<Sense>& senses() const noexcept { return senses_; }
  const std::vector<std::optional<Rat>>& lower_bounds() const noexcept { return lower_; }
  const std::optional<RatVec>& objective() const noexcept { return objective_; }
  Goal goal() const noexcept { return goal_; }

 private:
  std::vector<RatVec> rows_;
  RatVec rhs_;
  std::vector<Sense> senses_;
  std::vector<std::optional<Rat>> lower_;
  std::optional<RatVec> objective_;
  Goal goal_ = Goal::Maximize;
};

enum class FeasibilityStatus { Feasible, Infeasible };

struct LPCertificate {
  FeasibilityStatus status = FeasibilityStatus::Infeasible;
  RatVec point;   // Feasible only
  RatVec farkas;  // Infeasible only, one multiplier per row

  bool feasible() const noexcept { return status == FeasibilityStatus::Feasible; }
  friend bool operator==(const LPCertificate&, const LPCertificate&) = default;
};

enum class OptimizeStatus { Optimal, Unbounded, Infeasible };

struct OptimizeResult {
  OptimizeStatus status = OptimizeStatus::Infeasible;
  Rat value;
  RatVec point;   // optimal point, or a feasible point when Unbounded
  RatVec farkas;  // Infeasible only
};

/// Throws Error(DimensionMismatch) if the problem is inconsistent.
LPCertificate solve_feasibility(const LPProblem& problem);

/// Throws Error(InvalidArgument) if no objective is set.
OptimizeResult solve_optimize(const LPProblem& problem);

bool satisfies_constraints(const LPProblem& problem, const RatVec& point);
bool is_farkas_certificate(const LPProblem& problem, const RatVec& y);

/// Re-checks a certificate by exact substitution.
bool verify_certificate(const LPProblem& problem, const LPCertificate& certificate);

}  // namespace toric::lp
