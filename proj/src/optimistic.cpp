#include "blp/optimistic.hpp"

namespace blp {

void require_a1(const BlpInstance& inst, const SolveOptions& options,
                const char* who) {
  if (options.force) return;
  const ValidationReport report = validate_a1(inst);
  if (report.a1_status != A1Status::Satisfied) {
    throw PreconditionError(std::string(who) + ": instance has a1_status " +
                            to_string(report.a1_status) +
                            "; pass force to run anyway");
  }
}

bool bilevel_feasible(const BlpInstance& inst, const Vec& x, const Vec& y) {
  if (x.size() != inst.num_leader_vars || y.size() != inst.num_follower_vars) {
    return false;
  }
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& v : y) {
    if (v < 0) return false;
  }
  const Vec leader_lhs =
      add(matvec(inst.leader_a, x), matvec(inst.leader_g, y));
  for (std::size_t i = 0; i < inst.num_leader_rows(); ++i) {
    if (leader_lhs[i] > inst.leader_h[i]) return false;
  }
  if (!contains(follower_set(inst, x), y)) return false;
  const PhiResult phi = eval_phi_direct(inst, x);
  return phi.status == EvalStatus::Ok && dot(inst.follower_cost, y) == phi.value;
}

namespace {

// min c_l.x + d_l.y over the high-point set with the value-function cut
// d_f.y <= slope_i.x + offset_i for a single fixed piece i. Any feasible
// point of this LP is bilevel feasible with the maximum attained at piece i.
LpProblem piece_subproblem(const BlpInstance& inst, const PwlPiece& piece) {
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  LpProblem lp;
  lp.sense = Sense::Minimize;
  lp.objective = Vec(nl + nf);
  for (std::size_t j = 0; j < nl; ++j) lp.objective[j] = inst.leader_cost_x[j];
  for (std::size_t j = 0; j < nf; ++j) {
    lp.objective[nl + j] = inst.leader_cost_y[j];
  }
  lp.constraints = Matrix(0, nl + nf);
  for (std::size_t i = 0; i < inst.num_leader_rows(); ++i) {
    Vec row(nl + nf);
    for (std::size_t j = 0; j < nl; ++j) row[j] = inst.leader_a(i, j);
    for (std::size_t j = 0; j < nf; ++j) row[nl + j] = inst.leader_g(i, j);
    lp.constraints.append_row(row);
    lp.rhs.push_back(inst.leader_h[i]);
  }
  for (std::size_t i = 0; i < inst.num_follower_rows(); ++i) {
    Vec row(nl + nf);
    for (std::size_t j = 0; j < nl; ++j) row[j] = inst.follower_a(i, j);
    for (std::size_t j = 0; j < nf; ++j) row[nl + j] = inst.follower_g(i, j);
    lp.constraints.append_row(row);
    lp.rhs.push_back(inst.follower_h[i]);
  }
  {
    Vec row(nl + nf);
    for (std::size_t j = 0; j < nl; ++j) row[j] = -piece.slope[j];
    for (std::size_t j = 0; j < nf; ++j) row[nl + j] = inst.follower_cost[j];
    lp.constraints.append_row(row);
    lp.rhs.push_back(piece.offset);
  }
  lp.relations.assign(lp.rhs.size(), Relation::LessEq);
  lp.domains.assign(nl + nf, VarDomain::NonNegative);
  return lp;
}

}  // namespace

OptimisticResult solve_optimistic(const BlpInstance& inst,
                                  const PwlConvexFunction& pwl,
                                  const SolveOptions& options) {
  if (inst.sense != ProblemSense::Optimistic) {
    throw PreconditionError("solve_optimistic: instance sense is pessimistic");
  }
  require_a1(inst, options, "solve_optimistic");

  OptimisticResult result;
  const std::size_t nl = inst.num_leader_vars;
  for (std::size_t i = 0; i < pwl.pieces.size(); ++i) {
    LpOutcome out = solve_lp(piece_subproblem(inst, pwl.pieces[i]));
    ++result.lp_count;
    if (out.status == LpStatus::Unbounded) {
      throw A1ViolationError(
          "optimistic subproblem unbounded; A1 boundedness does not hold");
    }
    if (out.status != LpStatus::Optimal) continue;
    Vec x(out.primal_point.begin(), out.primal_point.begin() + nl);
    Vec y(out.primal_point.begin() + nl, out.primal_point.end());
    const bool better =
        result.status == BilevelStatus::Infeasible || out.value < result.value;
    if (better) {
      result.status = BilevelStatus::Optimal;
      result.value = out.value;
      result.x = std::move(x);
      result.y = std::move(y);
      result.winning_piece = i;
    }
  }
  return result;
}

OptimisticResult solve_optimistic(const BlpInstance& inst,
                                  const SolveOptions& options) {
  return solve_optimistic(inst, build_pwl(inst), options);
}

}  // namespace blp
