#include "blp/special_case.hpp"

namespace blp {

bool is_minmin(const BlpInstance& inst) {
  return inst.leader_cost_y == inst.follower_cost &&
         coupling_view(inst).coupling_rows.empty();
}

bool is_minmax(const BlpInstance& inst) {
  if (!coupling_view(inst).coupling_rows.empty()) return false;
  for (std::size_t j = 0; j < inst.num_follower_vars; ++j) {
    if (inst.leader_cost_y[j] != -inst.follower_cost[j]) return false;
  }
  return true;
}

OptimisticResult solve_minmin(const BlpInstance& inst) {
  if (!is_minmin(inst)) {
    throw PreconditionError(
        "solve_minmin: requires d_l = d_f and no coupling rows");
  }
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const HPolyhedron joint = high_point_relaxation(inst);
  Vec objective(nl + nf);
  for (std::size_t j = 0; j < nl; ++j) objective[j] = inst.leader_cost_x[j];
  for (std::size_t j = 0; j < nf; ++j) objective[nl + j] = inst.leader_cost_y[j];

  OptimisticResult result;
  LpOutcome out = optimize(joint, objective, Sense::Minimize);
  ++result.lp_count;
  if (out.status == LpStatus::Unbounded) {
    throw A1ViolationError("min-min joint LP unbounded");
  }
  if (out.status == LpStatus::Infeasible) return result;
  result.status = BilevelStatus::Optimal;
  result.value = out.value;
  result.x.assign(out.primal_point.begin(), out.primal_point.begin() + nl);
  result.y.assign(out.primal_point.begin() + nl, out.primal_point.end());
  return result;
}

OptimisticResult solve_minmax(const BlpInstance& inst,
                              const PwlConvexFunction& pwl) {
  if (!is_minmax(inst)) {
    throw PreconditionError(
        "solve_minmax: requires d_l = -d_f and no coupling rows");
  }
  const std::vector<Vec> vertices = enumerate_vertices(leader_pure_set(inst));
  if (vertices.empty()) {
    if (is_empty(leader_pure_set(inst))) {
      OptimisticResult infeasible;
      ++infeasible.lp_count;
      return infeasible;
    }
    throw PreconditionError("solve_minmax: leader set has no extreme point");
  }

  OptimisticResult result;
  for (const Vec& vertex : vertices) {
    const PhiResult phi = eval_phi_direct(inst, vertex);
    ++result.lp_count;
    if (phi.status == EvalStatus::Unbounded) {
      throw A1ViolationError("follower LP unbounded at a leader vertex");
    }
    if (phi.status == EvalStatus::InfeasibleAt) continue;
    if (pwl_eval(pwl, vertex) != phi.value) {
      throw std::logic_error("value-function representation mismatch");
    }
    const Rational value = dot(inst.leader_cost_x, vertex) - phi.value;
    if (result.status == BilevelStatus::Infeasible || value < result.value) {
      result.status = BilevelStatus::Optimal;
      result.value = value;
      result.x = vertex;
      result.y = phi.minimizer;
    }
  }
  return result;
}

}  // namespace blp
