#include "blp/oracle.hpp"

#include <algorithm>
#include <random>

#include "blp/value_function.hpp"

namespace blp {

OptimisticResult optimistic_oracle(const BlpInstance& inst,
                                   const SolveOptions& options) {
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const std::size_t mf = inst.num_follower_rows();
  if (nf + mf > 12) {
    throw SizeGuardError("optimistic_oracle: 2^(n_f+m_f) patterns exceed guard");
  }
  require_a1(inst, options, "optimistic_oracle");

  // Variables: (x, y, lambda), all nonnegative. Base rows shared by every
  // pattern; the pattern then pins one side of each complementarity pair.
  const std::size_t num_vars = nl + nf + mf;
  Matrix base(0, num_vars);
  Vec base_rhs;
  for (std::size_t i = 0; i < inst.num_leader_rows(); ++i) {
    Vec row(num_vars);
    for (std::size_t j = 0; j < nl; ++j) row[j] = inst.leader_a(i, j);
    for (std::size_t j = 0; j < nf; ++j) row[nl + j] = inst.leader_g(i, j);
    base.append_row(row);
    base_rhs.push_back(inst.leader_h[i]);
  }
  const std::size_t follower_row_start = base.rows();
  for (std::size_t i = 0; i < mf; ++i) {
    Vec row(num_vars);
    for (std::size_t j = 0; j < nl; ++j) row[j] = inst.follower_a(i, j);
    for (std::size_t j = 0; j < nf; ++j) row[nl + j] = inst.follower_g(i, j);
    base.append_row(row);
    base_rhs.push_back(inst.follower_h[i]);
  }
  const std::size_t dual_row_start = base.rows();
  for (std::size_t j = 0; j < nf; ++j) {
    Vec row(num_vars);
    for (std::size_t i = 0; i < mf; ++i) row[nl + nf + i] = -inst.follower_g(i, j);
    base.append_row(row);
    base_rhs.push_back(inst.follower_cost[j]);
  }

  Vec objective(num_vars);
  for (std::size_t j = 0; j < nl; ++j) objective[j] = inst.leader_cost_x[j];
  for (std::size_t j = 0; j < nf; ++j) objective[nl + j] = inst.leader_cost_y[j];

  OptimisticResult result;
  const std::size_t patterns = std::size_t(1) << (mf + nf);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    LpProblem lp;
    lp.sense = Sense::Minimize;
    lp.objective = objective;
    lp.constraints = base;
    lp.rhs = base_rhs;
    lp.relations.assign(base_rhs.size(), Relation::LessEq);
    lp.domains.assign(num_vars, VarDomain::NonNegative);

    for (std::size_t i = 0; i < mf; ++i) {
      if (mask & (std::size_t(1) << i)) {
        lp.relations[follower_row_start + i] = Relation::Equal;
      } else {
        Vec row(num_vars);
        row[nl + nf + i] = 1;
        lp.constraints.append_row(row);
        lp.rhs.push_back(0);
        lp.relations.push_back(Relation::Equal);
      }
    }
    for (std::size_t j = 0; j < nf; ++j) {
      if (mask & (std::size_t(1) << (mf + j))) {
        lp.relations[dual_row_start + j] = Relation::Equal;
      } else {
        Vec row(num_vars);
        row[nl + j] = 1;
        lp.constraints.append_row(row);
        lp.rhs.push_back(0);
        lp.relations.push_back(Relation::Equal);
      }
    }

    LpOutcome out = solve_lp(lp);
    ++result.lp_count;
    if (out.status == LpStatus::Unbounded) {
      throw A1ViolationError("oracle pattern LP unbounded");
    }
    if (out.status != LpStatus::Optimal) continue;
    if (result.status == BilevelStatus::Infeasible || out.value < result.value) {
      result.status = BilevelStatus::Optimal;
      result.value = out.value;
      result.x.assign(out.primal_point.begin(), out.primal_point.begin() + nl);
      result.y.assign(out.primal_point.begin() + nl,
                      out.primal_point.begin() + nl + nf);
    }
  }
  return result;
}

PessimisticEvaluation pessimistic_evaluate(const BlpInstance& inst,
                                           const Vec& x) {
  PessimisticEvaluation eval;
  if (x.size() != inst.num_leader_vars) {
    throw DimensionError("pessimistic_evaluate: point dimension");
  }
  for (const auto& entry : x) {
    if (entry < 0) return eval;
  }
  const PhiResult phi = eval_phi_direct(inst, x);
  if (phi.status == EvalStatus::Unbounded) {
    throw A1ViolationError("follower LP unbounded below at evaluation point");
  }
  if (phi.status == EvalStatus::InfeasibleAt) return eval;
  eval.follower_feasible = true;

  const CouplingView view = coupling_view(inst);
  for (std::size_t row : view.pure_rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < inst.num_leader_vars; ++j) {
      lhs += inst.leader_a(row, j) * x[j];
    }
    if (lhs > inst.leader_h[row]) return eval;
  }
  for (std::size_t row : view.coupling_rows) {
    const ReactionMax worst = reaction_max(inst, x, inst.leader_g.row(row));
    if (worst.status == EvalStatus::Unbounded) {
      throw A1ViolationError("coupling maximum unbounded at evaluation point");
    }
    Rational lhs = worst.value;
    for (std::size_t j = 0; j < inst.num_leader_vars; ++j) {
      lhs += inst.leader_a(row, j) * x[j];
    }
    if (lhs > inst.leader_h[row]) return eval;
  }

  eval.feasible = true;
  eval.value = dot(inst.leader_cost_x, x);
  if (!is_zero(inst.leader_cost_y)) {
    const ReactionMax worst = reaction_max(inst, x, inst.leader_cost_y);
    if (worst.status == EvalStatus::Unbounded) {
      throw A1ViolationError("worst-case objective term unbounded");
    }
    eval.value += worst.value;
  }
  return eval;
}

std::vector<Vec> pessimistic_candidates(const BlpInstance& inst,
                                        const std::vector<Vec>& extra) {
  const HPolyhedron leader = leader_pure_set(inst);
  std::vector<Vec> points = enumerate_vertices(leader);
  if (!points.empty()) {
    // Seeded rational convex combinations of the vertices.
    std::mt19937_64 rng(0x5eed);
    const std::vector<Vec> vertices = points;
    for (int sample = 0; sample < 8; ++sample) {
      Vec weights(vertices.size());
      Rational total = 0;
      for (auto& w : weights) {
        w = Rational(1 + rng() % 7);
        total += w;
      }
      Vec point = zeros(inst.num_leader_vars);
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        point = add(point, scale(vertices[v], weights[v] / total));
      }
      points.push_back(std::move(point));
    }
  }
  for (const Vec& p : extra) {
    if (p.size() == inst.num_leader_vars && contains(leader, p)) {
      points.push_back(p);
    }
  }
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

namespace {

// Root of a + b x = 0 when b != 0.
void add_root(const Rational& constant, const Rational& slope,
              std::vector<Rational>& out) {
  if (slope != 0) out.push_back(-constant / slope);
}

// Composition u(x) = ux_coeff * x + ux_const of an affine functional over
// lifted coordinates with a segment of the lifted curve x -> u_i(x).
struct LiftedLine {
  Vec coeff;  // d(u)/dx per lifted coordinate
  Vec base;   // u at x = 0
};

void collect_linear_in_x(const AffineForm& functional, const LiftedLine& line,
                         Rational& slope, Rational& constant) {
  slope = dot(functional.coeff, line.coeff);
  constant = dot(functional.coeff, line.base) + functional.constant;
}

}  // namespace

PessimisticResult pessimistic_1d_sweep(const BlpInstance& inst) {
  if (inst.num_leader_vars != 1) {
    throw PreconditionError("pessimistic_1d_sweep: requires a single leader variable");
  }
  const HPolyhedron leader = leader_pure_set(inst);
  const std::vector<Vec> ends = enumerate_vertices(leader);
  PessimisticResult result;
  if (ends.empty()) return result;
  if (optimize(leader, {Rational(1)}, Sense::Maximize).status ==
      LpStatus::Unbounded) {
    throw PreconditionError("pessimistic_1d_sweep: leader set is unbounded");
  }
  const Rational lo = ends.front()[0];
  const Rational hi = ends.back()[0];

  const PwlConvexFunction pwl = build_pwl(inst);
  const LiftedBasisSystem system = build_basis_system(inst, LiftedMode::WT);
  const CouplingView view = coupling_view(inst);

  std::vector<Rational> breakpoints{lo, hi};
  for (std::size_t i = 0; i < pwl.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pwl.pieces.size(); ++j) {
      add_root(pwl.pieces[j].offset - pwl.pieces[i].offset,
               pwl.pieces[i].slope[0] - pwl.pieces[j].slope[0], breakpoints);
    }
  }

  // One lifted line per value-function piece: u(x) = (A_f x, piece_i(x)).
  std::vector<LiftedLine> lines;
  for (const PwlPiece& piece : pwl.pieces) {
    LiftedLine line;
    line.coeff = zeros(system.dim);
    line.base = zeros(system.dim);
    for (std::size_t r = 0; r < inst.num_follower_rows(); ++r) {
      line.coeff[r] = inst.follower_a(r, 0);
    }
    if (system.has_t) {
      line.coeff[system.dim - 1] = piece.slope[0];
      line.base[system.dim - 1] = piece.offset;
    }
    lines.push_back(std::move(line));
    if (!system.has_t) break;  // single trivial piece
  }

  for (const LiftedLine& line : lines) {
    for (const VertexMap& map : system.maps) {
      // Basis-feasibility sign changes.
      for (std::size_t r = 0; r < system.constraints.size(); ++r) {
        if (std::find(map.basis.indices.begin(), map.basis.indices.end(), r) !=
            map.basis.indices.end()) {
          continue;
        }
        const AffineForm violation =
            basis_row_violation(map, system.constraints[r], system.dim);
        Rational slope, constant;
        collect_linear_in_x(violation, line, slope, constant);
        add_root(constant, slope, breakpoints);
      }
      // Coupling expressions crossing their right-hand sides.
      for (std::size_t row : view.coupling_rows) {
        const Vec g = inst.leader_g.row(row);
        Rational slope = inst.leader_a(row, 0);
        Rational constant = dot(g, map.offset) - inst.leader_h[row];
        for (std::size_t d = 0; d < system.dim; ++d) {
          Rational coeff = 0;
          for (std::size_t r = 0; r < map.coeff.rows(); ++r) {
            coeff += g[r] * map.coeff(r, d);
          }
          slope += coeff * line.coeff[d];
          constant += coeff * line.base[d];
        }
        add_root(constant, slope, breakpoints);
      }
    }
    // Worst-case objective ties between bases.
    if (!is_zero(inst.leader_cost_y)) {
      auto objective_form = [&](const VertexMap& map) {
        AffineForm form;
        form.coeff = zeros(system.dim);
        form.constant = dot(inst.leader_cost_y, map.offset);
        for (std::size_t d = 0; d < system.dim; ++d) {
          Rational acc = 0;
          for (std::size_t r = 0; r < map.coeff.rows(); ++r) {
            acc += inst.leader_cost_y[r] * map.coeff(r, d);
          }
          form.coeff[d] = std::move(acc);
        }
        return form;
      };
      for (std::size_t a = 0; a < system.maps.size(); ++a) {
        const AffineForm fa = objective_form(system.maps[a]);
        for (std::size_t b = a + 1; b < system.maps.size(); ++b) {
          const AffineForm fb = objective_form(system.maps[b]);
          AffineForm diff{subtract(fa.coeff, fb.coeff),
                          fa.constant - fb.constant};
          Rational slope, constant;
          collect_linear_in_x(diff, line, slope, constant);
          add_root(constant, slope, breakpoints);
        }
      }
    }
  }

  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());
  std::vector<Rational> samples;
  for (const Rational& b : breakpoints) {
    if (b >= lo && b <= hi) samples.push_back(b);
  }
  const std::size_t kept = samples.size();
  for (std::size_t i = 0; i + 1 < kept; ++i) {
    samples.push_back((samples[i] + samples[i + 1]) / 2);
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  if (samples.size() > 100000) {
    throw SizeGuardError("pessimistic_1d_sweep: breakpoint count exceeds guard");
  }

  for (const Rational& x_value : samples) {
    const PessimisticEvaluation eval = pessimistic_evaluate(inst, {x_value});
    ++result.counts.lp_solves;
    if (!eval.feasible) continue;
    if (result.status == BilevelStatus::Infeasible || eval.value < result.value) {
      result.status = BilevelStatus::Optimal;
      result.value = eval.value;
      result.x = {x_value};
      result.verified_pointwise = true;
    }
  }
  return result;
}

}  // namespace blp
