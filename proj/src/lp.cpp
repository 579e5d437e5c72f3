#include "toric/lp.hpp"

#include <utility>

#include "toric/error.hpp"

namespace toric::lp {

void LPProblem::add_constraint(RatVec coeffs, Sense sense, Rat rhs) {
  if (coeffs.size() != num_vars())
    throw Error(ErrorCode::DimensionMismatch, "constraint has " + std::to_string(coeffs.size()) +
                                                  " coefficients, problem has " + std::to_string(num_vars()) +
                                                  " variables");
  rows_.push_back(std::move(coeffs));
  senses_.push_back(sense);
  rhs_.push_back(std::move(rhs));
}

void LPProblem::set_lower_bound(std::size_t var, Rat bound) {
  if (var >= num_vars()) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  lower_[var] = std::move(bound);
}

void LPProblem::set_free(std::size_t var) {
  if (var >= num_vars()) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  lower_[var].reset();
}

void LPProblem::set_objective(RatVec coeffs, Goal goal) {
  if (coeffs.size() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "objective length mismatch");
  objective_ = std::move(coeffs);
  goal_ = goal;
}

namespace {

void check_dimensions(const LPProblem& p) {
  if (p.rhs().size() != p.rows().size() || p.senses().size() != p.rows().size())
    throw Error(ErrorCode::DimensionMismatch, "row data sizes disagree");
  for (const auto& row : p.rows())
    if (row.size() != p.num_vars()) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
  if (p.objective() && p.objective()->size() != p.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "objective length mismatch");
}

// Standard-form tableau: rows T z = rhs, z >= 0. Column layout is
// [structural | slack/surplus | artificial], one artificial per row.
class Tableau {
 public:
  explicit Tableau(const LPProblem& p) : problem_(p) {
    const std::size_t m = p.num_rows();
    const std::size_t n = p.num_vars();

    for (std::size_t j = 0; j < n; ++j) {
      column_of_var_.push_back(num_struct_);
      num_struct_ += p.lower_bounds()[j] ? 1 : 2;
    }
    std::size_t num_slack = 0;
    for (auto s : p.senses())
      if (s != Sense::Equal) ++num_slack;
    slack_begin_ = num_struct_;
    art_begin_ = num_struct_ + num_slack;
    cols_ = art_begin_ + m;

    t_.assign(m, RatVec(cols_));
    rhs_.assign(m, Rat(0));
    row_sign_.assign(m, 1);
    basis_.resize(m);

    std::size_t slack = slack_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      Rat b = p.rhs()[i];
      for (std::size_t j = 0; j < n; ++j) {
        const Rat& a = p.rows()[i][j];
        if (a == 0) continue;
        const std::size_t c = column_of_var_[j];
        if (const auto& l = p.lower_bounds()[j]) {
          t_[i][c] = a;
          b -= a * *l;
        } else {
          t_[i][c] = a;
          t_[i][c + 1] = -a;
        }
      }
      if (p.senses()[i] == Sense::LessEqual) t_[i][slack++] = 1;
      else if (p.senses()[i] == Sense::GreaterEqual) t_[i][slack++] = -1;
      if (b < 0) {
        row_sign_[i] = -1;
        b = -b;
        for (std::size_t c = 0; c < art_begin_; ++c) t_[i][c] = -t_[i][c];
      }
      rhs_[i] = b;
      t_[i][art_begin_ + i] = 1;
      basis_[i] = art_begin_ + i;
    }
  }

  // Phase I: minimize the sum of artificials. Returns true if feasible.
  bool phase_one() {
    RatVec cost(cols_);
    for (std::size_t c = art_begin_; c < cols_; ++c) cost[c] = 1;
    set_costs(cost);
    run(cols_);
    Rat infeasibility = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] >= art_begin_) infeasibility += rhs_[i];
    return infeasibility == 0;
  }

  // Duals of the phase-I optimum mapped back to the original rows.
  RatVec farkas() const {
    RatVec y(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rat pi = 1 - reduced_[art_begin_ + i];
      y[i] = row_sign_[i] * pi;
    }
    return y;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t c = 0; c < art_begin_; ++c) {
        if (t_[i][c] != 0) {
          pivot(i, c);
          break;
        }
      }
    }
  }

  // Phase II on the original objective (maximize or minimize).
  // Returns false when unbounded.
  bool phase_two(const RatVec& objective, Goal goal) {
    RatVec cost(cols_);
    for (std::size_t j = 0; j < problem_.num_vars(); ++j) {
      Rat c = goal == Goal::Maximize ? Rat(-objective[j]) : objective[j];
      const std::size_t col = column_of_var_[j];
      cost[col] = c;
      if (!problem_.lower_bounds()[j]) cost[col + 1] = -c;
    }
    set_costs(cost);
    return run(art_begin_);
  }

  RatVec point() const {
    RatVec z(cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i) z[basis_[i]] = rhs_[i];
    RatVec x(problem_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      const std::size_t col = column_of_var_[j];
      if (const auto& l = problem_.lower_bounds()[j]) x[j] = *l + z[col];
      else x[j] = z[col] - z[col + 1];
    }
    return x;
  }

 private:
  void set_costs(const RatVec& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (t_[i][c] != 0) reduced_[c] -= cb * t_[i][c];
    }
  }

  // Primal simplex over columns [0, limit). Entering: lowest index with
  // negative reduced cost. Leaving: minimum ratio, ties to the lowest basic
  // column index. Returns false when an entering column is unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t c = 0; c < limit; ++c)
        if (reduced_[c] < 0) {
          enter = c;
          break;
        }
      if (enter == limit) return true;

      std::size_t leave = basis_.size();
      Rat best;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / t_[i][enter];
        if (leave == basis_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == basis_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = 1 / t_[row][col];
    for (auto& x : t_[row]) x *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rat f = t_[i][col];
      for (std::size_t c = 0; c < cols_; ++c)
        if (t_[row][c] != 0) t_[i][c] -= f * t_[row][c];
      rhs_[i] -= f * rhs_[row];
    }
    if (reduced_[col] != 0) {
      const Rat f = reduced_[col];
      for (std::size_t c = 0; c < cols_; ++c)
        if (t_[row][c] != 0) reduced_[c] -= f * t_[row][c];
    }
    basis_[row] = col;
  }

  const LPProblem& problem_;
  std::vector<std::size_t> column_of_var_;
  std::size_t num_struct_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatVec> t_;
  RatVec rhs_;
  std::vector<int> row_sign_;
  std::vector<std::size_t> basis_;
  RatVec cost_;
  RatVec reduced_;
};

}  // namespace

LPCertificate solve_feasibility(const LPProblem& problem) {
  check_dimensions(problem);
  Tableau tab(problem);
  if (!tab.phase_one()) return {FeasibilityStatus::Infeasible, {}, tab.farkas()};
  return {FeasibilityStatus::Feasible, tab.point(), {}};
}

OptimizeResult solve_optimize(const LPProblem& problem) {
  check_dimensions(problem);
  if (!problem.objective()) throw Error(ErrorCode::InvalidArgument, "solve_optimize needs an objective");
  Tableau tab(problem);
  if (!tab.phase_one()) return {OptimizeStatus::Infeasible, Rat(0), {}, tab.farkas()};
  tab.drive_out_artificials();
  const bool bounded = tab.phase_two(*problem.objective(), problem.goal());
  OptimizeResult result;
  result.point = tab.point();
  result.status = bounded ? OptimizeStatus::Optimal : OptimizeStatus::Unbounded;
  if (bounded) {
    result.value = 0;
    for (std::size_t j = 0; j < problem.num_vars(); ++j) result.value += (*problem.objective())[j] * result.point[j];
  }
  return result;
}

bool satisfies_constraints(const LPProblem& problem, const RatVec& point) {
  if (point.size() != problem.num_vars()) return false;
  for (std::size_t j = 0; j < point.size(); ++j)
    if (const auto& l = problem.lower_bounds()[j]; l && point[j] < *l) return false;
  for (std::size_t i = 0; i < problem.num_rows(); ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += problem.rows()[i][j] * point[j];
    const Rat& b = problem.rhs()[i];
    switch (problem.senses()[i]) {
      case Sense::LessEqual:
        if (lhs > b) return false;
        break;
      case Sense::Equal:
        if (lhs != b) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < b) return false;
        break;
    }
  }
  return true;
}

bool is_farkas_certificate(const LPProblem& problem, const RatVec& y) {
  if (y.size() != problem.num_rows()) return false;
  Rat yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (problem.senses()[i] == Sense::GreaterEqual && y[i] < 0) return false;
    if (problem.senses()[i] == Sense::LessEqual && y[i] > 0) return false;
    yb += y[i] * problem.rhs()[i];
  }
  Rat cl = 0;
  for (std::size_t j = 0; j < problem.num_vars(); ++j) {
    Rat c = 0;
    for (std::size_t i = 0; i < y.size(); ++i) c += y[i] * problem.rows()[i][j];
    if (const auto& l = problem.lower_bounds()[j]) {
      if (c > 0) return false;
      cl += c * *l;
    } else if (c != 0) {
      return false;
    }
  }
  return cl < yb;
}

bool verify_certificate(const LPProblem& problem, const LPCertificate& certificate) {
  return certificate.feasible() ? satisfies_constraints(problem, certificate.point)
                                : is_farkas_certificate(problem, certificate.farkas);
}

}  // namespace toric::lp
