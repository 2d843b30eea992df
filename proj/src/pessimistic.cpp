#include "blp/pessimistic.hpp"

#include <algorithm>

#include "blp/oracle.hpp"
#include "blp/value_function.hpp"

namespace blp {

Rational affine_eval(const AffineForm& f, const Vec& u) {
  return dot(f.coeff, u) + f.constant;
}

Vec vertex_at(const VertexMap& map, const Vec& u) {
  return add(matvec(map.coeff, u), map.offset);
}

std::vector<Basis> enumerate_candidate_bases(
    const Matrix& rows, std::size_t dim,
    std::optional<std::size_t> required_index) {
  const std::size_t m = rows.rows();
  std::vector<Basis> bases;
  if (dim == 0 || m < dim) return bases;
  if (required_index && *required_index >= m) {
    throw DimensionError("enumerate_candidate_bases: required index out of range");
  }

  std::vector<std::size_t> pick(dim);
  for (std::size_t i = 0; i < dim; ++i) pick[i] = i;
  for (;;) {
    const bool has_required =
        !required_index ||
        std::find(pick.begin(), pick.end(), *required_index) != pick.end();
    if (has_required) {
      Matrix stacked(dim, rows.cols());
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) {
          stacked(i, j) = rows(pick[i], j);
        }
      }
      if (determinant(stacked) != 0) {
        bases.push_back(Basis{pick, required_index});
      }
    }
    std::size_t k = dim;
    while (k > 0 && pick[k - 1] == m - dim + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < dim; ++i) pick[i] = pick[i - 1] + 1;
  }
  return bases;
}

LiftedBasisSystem build_basis_system(const BlpInstance& inst, LiftedMode mode) {
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const std::size_t mf = inst.num_follower_rows();

  LiftedBasisSystem system;
  system.has_t = !is_zero(inst.follower_cost);
  const std::size_t base_dim = mode == LiftedMode::WT ? mf : nl;
  system.dim = base_dim + (system.has_t ? 1 : 0);

  // Value-equality row first (index 0), then v >= 0, then the G_f rows.
  if (system.has_t) {
    LiftedConstraint eq;
    eq.v_coeff = inst.follower_cost;
    eq.rhs.coeff = zeros(system.dim);
    eq.rhs.coeff[system.dim - 1] = 1;
    eq.rhs.constant = 0;
    eq.is_equality = true;
    system.constraints.push_back(std::move(eq));
  }
  for (std::size_t j = 0; j < nf; ++j) {
    LiftedConstraint row;
    row.v_coeff = zeros(nf);
    row.v_coeff[j] = -1;
    row.rhs.coeff = zeros(system.dim);
    row.rhs.constant = 0;
    system.constraints.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < mf; ++i) {
    LiftedConstraint row;
    row.v_coeff = inst.follower_g.row(i);
    row.rhs.coeff = zeros(system.dim);
    if (mode == LiftedMode::WT) {
      row.rhs.coeff[i] = -1;
    } else {
      for (std::size_t j = 0; j < nl; ++j) row.rhs.coeff[j] = -inst.follower_a(i, j);
    }
    row.rhs.constant = inst.follower_h[i];
    system.constraints.push_back(std::move(row));
  }

  Matrix coeff_rows(0, nf);
  for (const LiftedConstraint& c : system.constraints) {
    coeff_rows.append_row(c.v_coeff);
  }
  const std::optional<std::size_t> required =
      system.has_t ? std::optional<std::size_t>(0) : std::nullopt;
  for (Basis& basis : enumerate_candidate_bases(coeff_rows, nf, required)) {
    Matrix stacked(nf, nf);
    Matrix rhs(nf, system.dim + 1);
    for (std::size_t r = 0; r < nf; ++r) {
      const LiftedConstraint& c = system.constraints[basis.indices[r]];
      for (std::size_t j = 0; j < nf; ++j) stacked(r, j) = c.v_coeff[j];
      for (std::size_t d = 0; d < system.dim; ++d) rhs(r, d) = c.rhs.coeff[d];
      rhs(r, system.dim) = c.rhs.constant;
    }
    auto solved = solve_square_system_multi(stacked, rhs);
    if (!solved) {
      throw std::logic_error("candidate basis unexpectedly singular");
    }
    VertexMap map;
    map.basis = std::move(basis);
    map.coeff = Matrix(nf, system.dim);
    map.offset = Vec(nf);
    for (std::size_t r = 0; r < nf; ++r) {
      for (std::size_t d = 0; d < system.dim; ++d) map.coeff(r, d) = (*solved)(r, d);
      map.offset[r] = (*solved)(r, system.dim);
    }
    system.maps.push_back(std::move(map));
  }
  return system;
}

AffineForm basis_row_violation(const VertexMap& map, const LiftedConstraint& row,
                               std::size_t dim) {
  AffineForm out;
  out.coeff = zeros(dim);
  out.constant = dot(row.v_coeff, map.offset) - row.rhs.constant;
  for (std::size_t d = 0; d < dim; ++d) {
    Rational acc = -row.rhs.coeff[d];
    for (std::size_t r = 0; r < map.coeff.rows(); ++r) {
      acc += row.v_coeff[r] * map.coeff(r, d);
    }
    out.coeff[d] = std::move(acc);
  }
  return out;
}

bool basis_feasible_at(const VertexMap& map,
                       const std::vector<LiftedConstraint>& constraints,
                       const Vec& u) {
  const Vec v = vertex_at(map, u);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    if (std::find(map.basis.indices.begin(), map.basis.indices.end(), r) !=
        map.basis.indices.end()) {
      continue;
    }
    if (dot(constraints[r].v_coeff, v) > affine_eval(constraints[r].rhs, u)) {
      return false;
    }
  }
  return true;
}

LiftedSpace make_lifted_space(const BlpInstance& inst, LiftedMode mode) {
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const HPolyhedron relaxation = high_point_relaxation(inst);

  LiftedSpace space;
  space.mode = mode;
  space.has_t = !is_zero(inst.follower_cost);
  space.base_dim = mode == LiftedMode::WT ? inst.num_follower_rows() : nl;
  space.dim = space.base_dim + (space.has_t ? 1 : 0);

  std::vector<Vec> objectives;
  for (std::size_t d = 0; d < space.base_dim; ++d) {
    Vec obj = zeros(nl + nf);
    if (mode == LiftedMode::WT) {
      for (std::size_t j = 0; j < nl; ++j) obj[j] = inst.follower_a(d, j);
    } else {
      obj[d] = 1;
    }
    objectives.push_back(std::move(obj));
  }
  if (space.has_t) {
    Vec obj = zeros(nl + nf);
    for (std::size_t j = 0; j < nf; ++j) obj[nl + j] = inst.follower_cost[j];
    objectives.push_back(std::move(obj));
  }

  Vec lo(space.dim), hi(space.dim);
  for (std::size_t d = 0; d < space.dim; ++d) {
    LpOutcome high = optimize(relaxation, objectives[d], Sense::Maximize);
    LpOutcome low = optimize(relaxation, objectives[d], Sense::Minimize);
    if (high.status == LpStatus::Unbounded || low.status == LpStatus::Unbounded) {
      throw A1ViolationError(
          "lifted coordinate unbounded over the high-point relaxation");
    }
    if (high.status != LpStatus::Optimal || low.status != LpStatus::Optimal) {
      throw std::logic_error("empty relaxation while building the lifted box");
    }
    lo[d] = low.value - 1;
    hi[d] = high.value + 1;
  }
  space.bounding_box = make_box(lo, hi);
  return space;
}

std::vector<Hyperplane> build_hyperplanes(const BlpInstance& inst,
                                          const LiftedSpace& space,
                                          const std::vector<VertexMap>& maps) {
  const LiftedBasisSystem system = build_basis_system(inst, space.mode);
  std::vector<Hyperplane> planes;
  for (const VertexMap& map : maps) {
    for (std::size_t r = 0; r < system.constraints.size(); ++r) {
      if (std::find(map.basis.indices.begin(), map.basis.indices.end(), r) !=
          map.basis.indices.end()) {
        continue;
      }
      AffineForm violation =
          basis_row_violation(map, system.constraints[r], system.dim);
      if (is_zero(violation.coeff)) continue;
      planes.push_back(
          make_hyperplane(std::move(violation.coeff), -violation.constant));
    }
  }
  return dedup_hyperplanes(std::move(planes));
}

BlpInstance normalize_epigraph(const BlpInstance& inst) {
  if (inst.sense != ProblemSense::Pessimistic) {
    throw PreconditionError("normalize_epigraph: instance sense is optimistic");
  }
  if (is_zero(inst.leader_cost_y)) return inst;

  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const HPolyhedron relaxation = high_point_relaxation(inst);
  Vec objective = zeros(nl + nf);
  for (std::size_t j = 0; j < nf; ++j) objective[nl + j] = inst.leader_cost_y[j];
  LpOutcome high = optimize(relaxation, objective, Sense::Maximize);
  LpOutcome low = optimize(relaxation, objective, Sense::Minimize);
  if (high.status == LpStatus::Unbounded || low.status == LpStatus::Unbounded) {
    throw A1ViolationError(
        "epigraph bounds unbounded over the high-point relaxation");
  }
  if (high.status != LpStatus::Optimal || low.status != LpStatus::Optimal) {
    throw PreconditionError("normalize_epigraph: empty high-point relaxation");
  }
  const Rational theta_max = high.value;
  const Rational theta_min = low.value;
  const bool shifted = theta_min < 0;

  BlpInstance out = inst;
  out.name = inst.name.empty() ? "epigraph" : inst.name + "+epigraph";
  out.num_leader_vars = nl + (shifted ? 2 : 1);
  out.leader_cost_x.push_back(Rational(1));
  if (shifted) out.leader_cost_x.push_back(theta_min);
  out.leader_cost_y = zeros(nf);

  Matrix a(0, out.num_leader_vars);
  for (std::size_t i = 0; i < inst.num_leader_rows(); ++i) {
    Vec row = inst.leader_a.row(i);
    row.resize(out.num_leader_vars);
    a.append_row(row);
  }
  Matrix g = inst.leader_g;
  Vec h = inst.leader_h;

  // theta box rows, then the epigraph coupling row d_l.y - theta <= 0.
  {
    Vec row(out.num_leader_vars);
    row[nl] = 1;
    a.append_row(row);
    g.append_row(zeros(nf));
    h.push_back(shifted ? theta_max - theta_min : theta_max);
  }
  if (shifted) {
    Vec row(out.num_leader_vars);
    row[nl + 1] = 1;
    a.append_row(row);
    g.append_row(zeros(nf));
    h.push_back(Rational(1));
    row[nl + 1] = -1;
    a.append_row(row);
    g.append_row(zeros(nf));
    h.push_back(Rational(-1));
  }
  {
    Vec row(out.num_leader_vars);
    row[nl] = -1;
    if (shifted) row[nl + 1] = -theta_min;
    a.append_row(row);
    g.append_row(inst.leader_cost_y);
    h.push_back(Rational(0));
  }

  Matrix fa(0, out.num_leader_vars);
  for (std::size_t i = 0; i < inst.num_follower_rows(); ++i) {
    Vec row = inst.follower_a.row(i);
    row.resize(out.num_leader_vars);
    fa.append_row(row);
  }

  out.leader_a = std::move(a);
  out.leader_g = std::move(g);
  out.leader_h = std::move(h);
  out.follower_a = std::move(fa);
  check_instance(out);
  return out;
}

namespace {

struct Candidate {
  Rational value;
  std::size_t region_ordinal = 0;
  std::size_t piece = 0;
  Vec x_extended;
  std::vector<int> signs;
  std::vector<std::vector<std::size_t>> active_bases;
  LpProblem subproblem;  // kept for interior-optimum recovery
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.region_ordinal != b.region_ordinal) return a.region_ordinal < b.region_ordinal;
  if (a.piece != b.piece) return a.piece < b.piece;
  return lex_less(a.x_extended, b.x_extended);
}

// One LP per (region, piece): minimize the leader objective over x in the
// pure leader set, the lifted point u linked to x, u in the region closure,
// t pinned to the value function with the maximum attained at the selected
// piece, and every coupling row enforced on every basis feasible in the
// region.
struct SubproblemBuilder {
  const BlpInstance& inst;
  const LiftedSpace& space;
  const LiftedBasisSystem& system;
  const PwlConvexFunction& pwl;
  const CouplingView& view;

  LpProblem build(const ArrangementCell& region,
                  const std::vector<std::size_t>& feasible_maps,
                  std::size_t piece_index) const {
    const std::size_t nl = inst.num_leader_vars;
    const std::size_t dim = space.dim;
    const std::size_t num_vars = nl + dim;

    LpProblem lp;
    lp.sense = Sense::Minimize;
    lp.objective = zeros(num_vars);
    for (std::size_t j = 0; j < nl; ++j) lp.objective[j] = inst.leader_cost_x[j];
    lp.domains.assign(num_vars, VarDomain::Free);
    for (std::size_t j = 0; j < nl; ++j) lp.domains[j] = VarDomain::NonNegative;
    lp.constraints = Matrix(0, num_vars);

    for (std::size_t row : view.pure_rows) {
      Vec r(num_vars);
      for (std::size_t j = 0; j < nl; ++j) r[j] = inst.leader_a(row, j);
      lp.constraints.append_row(r);
      lp.rhs.push_back(inst.leader_h[row]);
      lp.relations.push_back(Relation::LessEq);
    }
    // Link u to x.
    for (std::size_t d = 0; d < space.base_dim; ++d) {
      Vec r(num_vars);
      r[nl + d] = 1;
      if (space.mode == LiftedMode::WT) {
        for (std::size_t j = 0; j < nl; ++j) r[j] = -inst.follower_a(d, j);
      } else {
        r[d] = -1;
      }
      lp.constraints.append_row(r);
      lp.rhs.push_back(0);
      lp.relations.push_back(Relation::Equal);
    }
    // Region closure (bounding box plus sign halfspaces).
    for (std::size_t i = 0; i < region.closure.num_rows(); ++i) {
      Vec r(num_vars);
      for (std::size_t d = 0; d < dim; ++d) r[nl + d] = region.closure.a(i, d);
      lp.constraints.append_row(r);
      lp.rhs.push_back(region.closure.b[i]);
      lp.relations.push_back(Relation::LessEq);
    }
    // Value-function rows.
    if (space.has_t) {
      for (std::size_t i = 0; i < pwl.pieces.size(); ++i) {
        lp.constraints.append_row(piece_row(i, num_vars, Rational(1)));
        lp.rhs.push_back(piece_rhs(i, Rational(1)));
        lp.relations.push_back(Relation::LessEq);
      }
      lp.constraints.append_row(piece_row(piece_index, num_vars, Rational(-1)));
      lp.rhs.push_back(piece_rhs(piece_index, Rational(-1)));
      lp.relations.push_back(Relation::LessEq);
    }
    // Coupling rows for every feasible basis.
    for (std::size_t row : view.coupling_rows) {
      const Vec g = inst.leader_g.row(row);
      for (std::size_t map_index : feasible_maps) {
        const VertexMap& map = system.maps[map_index];
        Vec r(num_vars);
        for (std::size_t j = 0; j < nl; ++j) r[j] = inst.leader_a(row, j);
        Rational rhs = inst.leader_h[row] - dot(g, map.offset);
        for (std::size_t d = 0; d < dim; ++d) {
          Rational coeff = 0;
          for (std::size_t vr = 0; vr < map.coeff.rows(); ++vr) {
            coeff += g[vr] * map.coeff(vr, d);
          }
          r[nl + d] = std::move(coeff);
        }
        lp.constraints.append_row(r);
        lp.rhs.push_back(std::move(rhs));
        lp.relations.push_back(Relation::LessEq);
      }
    }
    return lp;
  }

 private:
  // sign=+1: piece_i(w) <= t rows; sign=-1: t <= piece_i(w) for the
  // selected piece.
  Vec piece_row(std::size_t i, std::size_t num_vars, Rational sign) const {
    const std::size_t nl = inst.num_leader_vars;
    Vec r(num_vars);
    if (space.mode == LiftedMode::WT) {
      const Vec& lambda = pwl.pieces[i].lambda;
      for (std::size_t d = 0; d < space.base_dim; ++d) r[nl + d] = sign * lambda[d];
    } else {
      const Vec& slope = pwl.pieces[i].slope;
      for (std::size_t d = 0; d < space.base_dim; ++d) r[nl + d] = sign * slope[d];
    }
    r[nl + space.dim - 1] = -sign;
    return r;
  }

  Rational piece_rhs(std::size_t i, Rational sign) const {
    if (space.mode == LiftedMode::WT) {
      return sign * dot(inst.follower_h, pwl.pieces[i].lambda);
    }
    return -sign * pwl.pieces[i].offset;
  }
};

}  // namespace

namespace {

// Optima of a subproblem can sit on arrangement-cell boundaries, where the
// enforced basis set under-approximates the truth and the point may not be
// pessimistically feasible. This LP searches the subproblem's optimal face
// for a point that satisfies every signed hyperplane strictly; at such a
// point the enforced constraints are exact, so the value is genuinely
// attained. Returns the witness when a positive margin exists.
std::optional<Vec> interior_optimum(const Candidate& candidate,
                                    const std::vector<Hyperplane>& planes,
                                    std::size_t nl, std::size_t dim,
                                    std::uint64_t* lp_counter) {
  LpProblem lp = candidate.subproblem;
  const std::size_t margin = lp.num_vars();
  // Widen every row with a zero coefficient for the margin variable.
  Matrix rows(0, margin + 1);
  for (std::size_t i = 0; i < lp.constraints.rows(); ++i) {
    Vec row = lp.constraints.row(i);
    row.push_back(Rational(0));
    rows.append_row(row);
  }
  lp.constraints = std::move(rows);
  lp.domains.push_back(VarDomain::Free);
  {
    Vec row = lp.objective;
    row.push_back(Rational(0));
    lp.constraints.append_row(row);
    lp.rhs.push_back(candidate.value);
    lp.relations.push_back(Relation::Equal);
  }
  for (std::size_t h = 0; h < planes.size(); ++h) {
    if (candidate.signs[h] == 0) continue;
    const Rational sgn = candidate.signs[h];
    Vec row(margin + 1);
    for (std::size_t d = 0; d < dim; ++d) row[nl + d] = -sgn * planes[h].normal[d];
    row[margin] = 1;
    lp.constraints.append_row(row);
    lp.rhs.push_back(-sgn * planes[h].offset);
    lp.relations.push_back(Relation::LessEq);
  }
  {
    Vec row(margin + 1);
    row[margin] = 1;
    lp.constraints.append_row(row);
    lp.rhs.push_back(Rational(1));
    lp.relations.push_back(Relation::LessEq);
  }
  lp.objective = zeros(margin + 1);
  lp.objective[margin] = 1;
  lp.sense = Sense::Maximize;

  const LpOutcome out = solve_lp(lp);
  ++*lp_counter;
  if (out.status != LpStatus::Optimal || out.value <= 0) return std::nullopt;
  return Vec(out.primal_point.begin(), out.primal_point.begin() + nl);
}

}  // namespace

PessimisticResult solve_pessimistic(const BlpInstance& inst,
                                    const PessimisticOptions& options) {
  if (inst.sense != ProblemSense::Pessimistic) {
    throw PreconditionError("solve_pessimistic: instance sense is optimistic");
  }
  SolveOptions guard;
  guard.force = options.force;
  require_a1(inst, guard, "solve_pessimistic");

  const BlpInstance normalized = normalize_epigraph(inst);
  const std::size_t nl_original = inst.num_leader_vars;
  const CouplingView view = coupling_view(normalized);
  PessimisticResult result;

  const HPolyhedron leader = leader_pure_set(normalized);
  if (is_empty(leader)) return result;

  auto verify = [&](const Vec& x_extended, const Rational& value) {
    Vec x(x_extended.begin(), x_extended.begin() + nl_original);
    const PessimisticEvaluation eval = pessimistic_evaluate(inst, x);
    return std::make_pair(eval.feasible && eval.value == value, std::move(x));
  };

  if (view.coupling_rows.empty()) {
    LpOutcome out = optimize(leader, normalized.leader_cost_x, Sense::Minimize);
    ++result.counts.lp_solves;
    if (out.status == LpStatus::Unbounded) {
      throw A1ViolationError("leader LP unbounded");
    }
    if (out.status != LpStatus::Optimal) return result;
    auto [ok, x] = verify(out.primal_point, out.value);
    if (!ok) {
      throw NoVerifiedCandidateError(
          "coupling-free optimum failed pointwise verification");
    }
    result.status = BilevelStatus::Optimal;
    result.value = out.value;
    result.x = std::move(x);
    result.verified_pointwise = true;
    return result;
  }

  const PwlConvexFunction pwl = build_pwl(normalized);
  LiftedMode mode = options.space.value_or(
      normalized.num_leader_vars < normalized.num_follower_rows()
          ? LiftedMode::XT
          : LiftedMode::WT);
  const LiftedSpace space = make_lifted_space(normalized, mode);
  const LiftedBasisSystem system = build_basis_system(normalized, mode);
  const std::vector<Hyperplane> planes =
      build_hyperplanes(normalized, space, system.maps);
  const Arrangement arrangement =
      enumerate_cells(planes, space.dim, space.bounding_box);

  result.counts.bases = system.maps.size();
  result.counts.cells = arrangement.cells.size();

  const std::size_t piece_count = space.has_t ? pwl.pieces.size() : 1;
  SubproblemBuilder builder{normalized, space, system, pwl, view};

  auto solve_regions = [&](const std::vector<ArrangementCell>& regions,
                           std::size_t ordinal_offset,
                           std::vector<Candidate>& candidates) {
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const ArrangementCell& region = regions[k];
      std::vector<std::size_t> feasible;
      std::vector<std::vector<std::size_t>> basis_sets;
      for (std::size_t m = 0; m < system.maps.size(); ++m) {
        if (basis_feasible_at(system.maps[m], system.constraints,
                              region.interior_point)) {
          feasible.push_back(m);
          basis_sets.push_back(system.maps[m].basis.indices);
        }
      }
      for (std::size_t piece = 0; piece < piece_count; ++piece) {
        LpProblem subproblem = builder.build(region, feasible, piece);
        LpOutcome out = solve_lp(subproblem);
        ++result.counts.lp_solves;
        if (out.status == LpStatus::Unbounded) {
          throw A1ViolationError("pessimistic subproblem unbounded");
        }
        if (out.status != LpStatus::Optimal) continue;
        Candidate candidate;
        candidate.value = out.value;
        candidate.region_ordinal = ordinal_offset + k;
        candidate.piece = piece;
        candidate.x_extended.assign(
            out.primal_point.begin(),
            out.primal_point.begin() + normalized.num_leader_vars);
        candidate.signs = region.signs;
        candidate.active_bases = basis_sets;
        candidate.subproblem = std::move(subproblem);
        candidates.push_back(std::move(candidate));
      }
    }
  };

  // Walks the sorted candidates; a candidate wins if its argmin verifies
  // pointwise or a strictly-interior optimum of the same value does.
  // Reports whether any cheaper candidate had to be dropped on the way.
  struct WalkOutcome {
    bool found = false;
    Candidate winner;
    Vec winner_x;
    bool dropped_below_winner = false;
    bool any_candidate = false;
  };
  auto walk = [&](std::vector<Candidate>& candidates) {
    std::sort(candidates.begin(), candidates.end(), candidate_less);
    WalkOutcome outcome;
    outcome.any_candidate = !candidates.empty();
    for (Candidate& candidate : candidates) {
      auto [ok, x] = verify(candidate.x_extended, candidate.value);
      if (!ok) {
        const auto witness = interior_optimum(
            candidate, arrangement.hyperplanes, normalized.num_leader_vars,
            space.dim, &result.counts.lp_solves);
        if (witness) {
          auto [ok2, x2] = verify(*witness, candidate.value);
          ok = ok2;
          x = std::move(x2);
        }
      }
      if (ok) {
        outcome.found = true;
        outcome.winner = candidate;
        outcome.winner_x = std::move(x);
        return outcome;
      }
      outcome.dropped_below_winner = true;
    }
    return outcome;
  };

  const bool start_strict = options.strict_faces;
  std::vector<Candidate> candidates;
  solve_regions(arrangement.cells, 0, candidates);
  if (start_strict) {
    const std::vector<ArrangementCell> faces = enumerate_faces(
        arrangement.hyperplanes, space.dim, space.bounding_box);
    solve_regions(faces, arrangement.cells.size(), candidates);
  }
  WalkOutcome outcome = walk(candidates);

  // The cell pass alone is inconclusive when a cheaper candidate was
  // discarded (the true optimum may sit exactly on a face) or nothing
  // verified at all; the face decomposition settles it exactly.
  const bool inconclusive =
      !start_strict && ((outcome.found && outcome.dropped_below_winner) ||
                        (!outcome.found && outcome.any_candidate));
  if (inconclusive) {
    const std::vector<ArrangementCell> faces = enumerate_faces(
        arrangement.hyperplanes, space.dim, space.bounding_box);
    solve_regions(faces, arrangement.cells.size(), candidates);
    outcome = walk(candidates);
  }

  if (outcome.found) {
    result.status = BilevelStatus::Optimal;
    result.value = outcome.winner.value;
    result.x = std::move(outcome.winner_x);
    result.cell_sign_vector = outcome.winner.signs;
    result.piece_index = outcome.winner.piece;
    result.verified_pointwise = true;
    result.active_bases = outcome.winner.active_bases;
  }
  return result;
}

}  // namespace blp
