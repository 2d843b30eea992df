#pragma once

#include "blp/generator.hpp"
#include "blp/instance_io.hpp"
#include "blp/oracle.hpp"
#include "blp/special_case.hpp"

namespace blp {

enum class SolveMethod { Auto, Thm1, Thm2, MinMax, MinMin, Oracle };

struct DriverOptions {
  SolveMethod method = SolveMethod::Auto;
  std::optional<LiftedMode> space;
  bool strict_faces = false;
  bool force = false;
};

/// Dispatches to a solver (Auto: min-min/min-max collapses first, then the
/// sense-matching decomposition solver) and packages the result as a
/// solution record, including certificate metadata and LP counters.
SolutionRecord solve_instance(const BlpInstance& inst,
                              const DriverOptions& options = {});

struct CheckReport {
  bool valid = false;
  std::vector<std::string> reasons;
};

/// Re-verifies a solution record against an instance: bilevel feasibility
/// and exact objective match for optimistic solutions, pointwise pessimistic
/// evaluation for pessimistic ones.
CheckReport check_solution(const BlpInstance& inst,
                           const SolutionRecord& record);

}  // namespace blp
