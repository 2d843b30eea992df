#pragma once

#include "blp/pessimistic.hpp"

namespace blp {

/// Raised when an oracle's exhaustive enumeration would exceed its guard.
struct SizeGuardError : std::runtime_error {
  explicit SizeGuardError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Independent optimistic reference: enumerates every complementarity
/// pattern of the follower KKT system (row slack or multiplier zero,
/// variable or reduced cost zero) and minimizes the leader objective over
/// each pattern polytope. Shares no reasoning with the value-function
/// decomposition. Guard: n_f + m_f <= 12.
OptimisticResult optimistic_oracle(const BlpInstance& inst,
                                   const SolveOptions& options = {});

struct PessimisticEvaluation {
  bool follower_feasible = false;  // Y(x) nonempty
  bool feasible = false;           // pessimistically feasible at x
  Rational value;                  // leader objective when feasible
};

/// Exact pointwise evaluation of pessimistic feasibility and objective:
/// pure leader rows at x, then one reaction-set maximum per coupling row,
/// plus the worst-case d_l term. Throws A1ViolationError when a coupling
/// maximum is unbounded.
PessimisticEvaluation pessimistic_evaluate(const BlpInstance& inst,
                                           const Vec& x);

/// Deterministic candidate sweep: leader-set vertices, seeded rational
/// points inside the leader set, and any caller-supplied extra points
/// (deduplicated, sorted).
std::vector<Vec> pessimistic_candidates(const BlpInstance& inst,
                                        const std::vector<Vec>& extra = {});

/// Exact pessimistic oracle for a single leader variable: collects every
/// breakpoint where any piece, basis-feasibility sign, coupling expression
/// or worst-case tie can change along the x-line, then evaluates
/// pessimistic_evaluate at all breakpoints and interval midpoints. On each
/// open interval between consecutive breakpoints every relevant function is
/// affine, so these evaluations settle the minimum exactly.
PessimisticResult pessimistic_1d_sweep(const BlpInstance& inst);

}  // namespace blp
