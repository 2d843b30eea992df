#pragma once

#include "blp/optimistic.hpp"

namespace blp {

/// Whether the min-min collapse applies: d_l = d_f entrywise and no
/// coupling rows.
bool is_minmin(const BlpInstance& inst);

/// Whether the min-max vertex reduction applies: d_l = -d_f entrywise and no
/// coupling rows.
bool is_minmax(const BlpInstance& inst);

/// Min-min case: one LP over the joint high-point set. Valid for both the
/// optimistic and the pessimistic sense.
OptimisticResult solve_minmin(const BlpInstance& inst);

/// Min-max case: evaluates c_l.x - phi(x) at every extreme point of the
/// leader set and returns the exact minimizer (ties: lexicographically
/// smallest vertex). Valid for both senses.
OptimisticResult solve_minmax(const BlpInstance& inst,
                              const PwlConvexFunction& pwl);

}  // namespace blp
