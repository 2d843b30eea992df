#pragma once

#include <optional>

#include "blp/value_function.hpp"

namespace blp {

enum class BilevelStatus { Optimal, Infeasible };

struct OptimisticResult {
  BilevelStatus status = BilevelStatus::Infeasible;
  Rational value;
  Vec x;
  Vec y;
  std::optional<std::size_t> winning_piece;
  std::uint64_t lp_count = 0;
};

struct SolveOptions {
  bool force = false;  // run despite a relaxed/violated A1 report
};

/// Optimistic solver by value-function decomposition: one LP per piece of
/// the follower value function, selecting the piece on which the maximum is
/// attained, then the exact minimum over the feasible subproblems
/// (ties: smallest piece index, then lexicographic x).
OptimisticResult solve_optimistic(const BlpInstance& inst,
                                  const PwlConvexFunction& pwl,
                                  const SolveOptions& options = {});

/// Convenience overload building the value function internally.
OptimisticResult solve_optimistic(const BlpInstance& inst,
                                  const SolveOptions& options = {});

/// Exact bilevel feasibility of a candidate pair: x >= 0, all leader rows at
/// (x, y), y in Y(x) and d_f . y equal to the follower optimum at x.
bool bilevel_feasible(const BlpInstance& inst, const Vec& x, const Vec& y);

/// Shared guard: throws PreconditionError unless A1 is satisfied or the
/// force flag is set.
void require_a1(const BlpInstance& inst, const SolveOptions& options,
                const char* who);

}  // namespace blp
