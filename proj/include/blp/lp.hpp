#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blp/linalg.hpp"

namespace blp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEq, Equal, GreaterEq };
enum class VarDomain { NonNegative, Free };

/// A linear program over exact rationals:
///   optimize objective . x   subject to   constraints x (rel) rhs,
/// with each variable either nonnegative or free.
struct LpProblem {
  Sense sense = Sense::Minimize;
  Vec objective;
  Matrix constraints;
  Vec rhs;
  std::vector<Relation> relations;
  std::vector<VarDomain> domains;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rhs.size(); }
};

/// Validates shape consistency; throws DimensionError otherwise.
void check_problem(const LpProblem& p);

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of an exact solve.
///
/// Optimal: primal_point and dual_point are set and self-checked: primal
/// feasibility, dual feasibility, complementary slackness and exact equality
/// of objective values. Dual sign convention: for a minimization problem,
/// dual_point[i] <= 0 on LessEq rows, >= 0 on GreaterEq rows, free on Equal
/// rows, with constraints^T dual <= objective on nonnegative variables
/// (equality on free variables); for maximization the inequalities reverse.
///
/// Unbounded: ray is a feasible direction with strictly improving objective.
/// Infeasible: farkas holds row multipliers aggregating to a contradiction
/// (multiplier sign matches row sense, aggregated column coefficients are
/// <= 0 on nonnegative variables, zero on free ones, and farkas . rhs > 0).
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec primal_point;
  Vec dual_point;
  Vec ray;
  Vec farkas;
};

/// Exact primal simplex (phase 1 / phase 2) with least-index (Bland)
/// pivoting throughout. Fully deterministic: identical inputs produce
/// identical outcomes.
LpOutcome solve_lp(const LpProblem& p);

/// Counters over all solve_lp calls in the process. Every Optimal outcome is
/// certified internally (strong duality at zero tolerance); a violation
/// throws and is also counted here.
struct LpGlobalStats {
  std::uint64_t solves = 0;
  std::uint64_t optimal_certified = 0;
  std::uint64_t certification_failures = 0;
};
const LpGlobalStats& lp_global_stats();
void reset_lp_global_stats();

}  // namespace blp
