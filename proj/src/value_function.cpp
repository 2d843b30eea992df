#include "blp/value_function.hpp"

#include <algorithm>

namespace blp {

HPolyhedron dual_polytope(const BlpInstance& inst) {
  const std::size_t mf = inst.num_follower_rows();
  const std::size_t nf = inst.num_follower_vars;
  Matrix a(nf, mf);
  for (std::size_t j = 0; j < nf; ++j) {
    for (std::size_t i = 0; i < mf; ++i) a(j, i) = -inst.follower_g(i, j);
  }
  return HPolyhedron{std::move(a), inst.follower_cost,
                     std::vector<bool>(mf, true)};
}

PwlConvexFunction build_pwl(const BlpInstance& inst) {
  const HPolyhedron lambda_set = dual_polytope(inst);
  std::vector<Vec> vertices = enumerate_vertices(lambda_set);
  if (vertices.empty()) {
    // Pointed set: no vertices means empty, i.e. the follower LP is
    // unbounded below wherever it is feasible.
    throw A1ViolationError(
        "dual polytope is empty; follower objective is unbounded below");
  }
  PwlConvexFunction f;
  for (Vec& lambda : vertices) {
    PwlPiece piece;
    piece.slope = Vec(inst.num_leader_vars);
    for (std::size_t j = 0; j < inst.num_leader_vars; ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i < inst.num_follower_rows(); ++i) {
        acc += inst.follower_a(i, j) * lambda[i];
      }
      piece.slope[j] = std::move(acc);
    }
    piece.offset = -dot(inst.follower_h, lambda);
    piece.lambda = std::move(lambda);
    const bool duplicate =
        std::any_of(f.pieces.begin(), f.pieces.end(), [&](const PwlPiece& p) {
          return p.slope == piece.slope && p.offset == piece.offset;
        });
    if (!duplicate) f.pieces.push_back(std::move(piece));
  }
  return f;
}

Rational pwl_eval(const PwlConvexFunction& f, const Vec& x) {
  if (f.pieces.empty()) {
    throw PreconditionError("pwl_eval: empty representation");
  }
  Rational best = dot(f.pieces.front().slope, x) + f.pieces.front().offset;
  for (std::size_t i = 1; i < f.pieces.size(); ++i) {
    Rational v = dot(f.pieces[i].slope, x) + f.pieces[i].offset;
    if (v > best) best = std::move(v);
  }
  return best;
}

namespace {

void check_leader_point(const BlpInstance& inst, const Vec& x) {
  if (x.size() != inst.num_leader_vars) {
    throw DimensionError("leader point has wrong dimension");
  }
  for (const auto& entry : x) {
    if (entry < 0) {
      throw PreconditionError("leader point must be nonnegative");
    }
  }
}

}  // namespace

PhiResult eval_phi_direct(const BlpInstance& inst, const Vec& x) {
  check_leader_point(inst, x);
  LpOutcome out =
      optimize(follower_set(inst, x), inst.follower_cost, Sense::Minimize);
  PhiResult result;
  switch (out.status) {
    case LpStatus::Optimal:
      result.status = EvalStatus::Ok;
      result.value = out.value;
      result.minimizer = out.primal_point;
      break;
    case LpStatus::Infeasible:
      result.status = EvalStatus::InfeasibleAt;
      break;
    case LpStatus::Unbounded:
      result.status = EvalStatus::Unbounded;
      break;
  }
  return result;
}

ReactionMax reaction_max(const BlpInstance& inst, const Vec& x,
                         const Vec& objective, bool use_equality) {
  check_leader_point(inst, x);
  if (objective.size() != inst.num_follower_vars) {
    throw DimensionError("reaction_max: objective dimension");
  }
  ReactionMax result;
  const PhiResult phi = eval_phi_direct(inst, x);
  if (phi.status == EvalStatus::InfeasibleAt) return result;
  if (phi.status == EvalStatus::Unbounded) {
    throw A1ViolationError("follower LP unbounded below at the queried point");
  }

  const HPolyhedron y_set = follower_set(inst, x);
  LpProblem lp;
  lp.sense = Sense::Maximize;
  lp.objective = objective;
  lp.constraints = y_set.a;
  lp.rhs = y_set.b;
  lp.relations.assign(y_set.num_rows(), Relation::LessEq);
  lp.constraints.append_row(inst.follower_cost);
  lp.rhs.push_back(phi.value);
  lp.relations.push_back(use_equality ? Relation::Equal : Relation::LessEq);
  lp.domains.assign(inst.num_follower_vars, VarDomain::NonNegative);

  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Unbounded) {
    result.status = EvalStatus::Unbounded;
    return result;
  }
  if (out.status == LpStatus::Infeasible) {
    // Cannot happen: the reaction set contains the phi minimizer.
    throw std::logic_error("reaction set unexpectedly empty");
  }
  result.status = EvalStatus::Ok;
  result.value = out.value;
  result.maximizer = out.primal_point;
  return result;
}

}  // namespace blp
