#include "blp/reduction.hpp"

#include <algorithm>

#include "blp/value_function.hpp"

namespace blp {

GadgetSystem build_gadget(std::size_t k, std::size_t num_vertices) {
  if (k < 1 || k > num_vertices) {
    throw PreconditionError("build_gadget: k must lie in 1..|V|");
  }
  GadgetSystem gadget;
  gadget.k = k;
  gadget.lambda_dim = num_vertices;
  gadget.equality_rows = Matrix(3, num_vertices);
  for (std::size_t i = 1; i <= num_vertices; ++i) {
    gadget.equality_rows(0, i - 1) = 1;
    gadget.equality_rows(1, i - 1) = Rational(Integer(i));
    gadget.equality_rows(2, i - 1) = Rational(Integer(i) * Integer(i));
  }
  const Integer kk(k);
  gadget.equality_rhs = {Rational(1), Rational(kk), Rational(kk * kk)};
  return gadget;
}

Rational gadget_lp_value(const GadgetSystem& gadget, const Vec& x) {
  const std::size_t n = gadget.lambda_dim;
  if (x.size() != n) throw DimensionError("gadget_lp_value: x dimension");
  LpProblem lp;
  lp.sense = Sense::Minimize;
  lp.objective = Vec(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    lp.objective[i] = x[i];
    lp.objective[n + i] = Rational(1) - x[i];
  }
  lp.constraints = Matrix(3, 2 * n);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      lp.constraints(r, i) = gadget.equality_rows(r, i);
      lp.constraints(r, n + i) = gadget.equality_rows(r, i);
    }
  }
  lp.rhs = gadget.equality_rhs;
  lp.relations.assign(3, Relation::Equal);
  lp.domains.assign(2 * n, VarDomain::NonNegative);
  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal) {
    throw std::logic_error("gadget LP must be feasible and bounded");
  }
  return out.value;
}

namespace {

// Split representation of y in R^3: columns (y1+, y2+, y3+, y1-, y2-, y3-).
Vec split_row(const Rational& c1, const Rational& c2, const Rational& c3) {
  return Vec{c1, c2, c3, -c1, -c2, -c3};
}

Rational box_bound(const BlpInstance& inst, const Graph& g) {
  // Largest coordinate magnitude over the attaining points of every
  // coupling maximum at every binary leader point, plus one.
  if (g.num_vertices > 12) {
    throw SizeGuardError("reduce_mis --box: too many vertices for bound search");
  }
  Rational best = 0;
  const CouplingView view = coupling_view(inst);
  for (std::size_t mask = 0; mask < (std::size_t(1) << g.num_vertices); ++mask) {
    Vec x(g.num_vertices);
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      x[v] = (mask >> v) & 1 ? 1 : 0;
    }
    for (std::size_t row : view.coupling_rows) {
      const ReactionMax worst = reaction_max(inst, x, inst.leader_g.row(row));
      if (worst.status != EvalStatus::Ok) continue;
      for (const Rational& coord : worst.maximizer) {
        const Rational magnitude = coord < 0 ? -coord : coord;
        if (magnitude > best) best = magnitude;
      }
    }
  }
  return best + 1;
}

}  // namespace

BlpInstance reduce_mis(const Graph& g, bool with_box) {
  check_graph(g);
  const std::size_t n = g.num_vertices;
  BlpInstance inst;
  inst.name = "mis-" + std::to_string(n) + "v-" + std::to_string(g.edges.size()) + "e";
  inst.sense = ProblemSense::Pessimistic;
  inst.num_leader_vars = n;
  inst.num_follower_vars = 6;

  // Leader: edge rows, unit bounds, then one coupling row per vertex.
  Matrix la(0, n);
  Matrix lg(0, 6);
  Vec lh;
  for (const auto& [i, j] : g.edges) {
    Vec row(n);
    row[i] = 1;
    row[j] = 1;
    la.append_row(row);
    lg.append_row(zeros(6));
    lh.push_back(Rational(1));
  }
  for (std::size_t v = 0; v < n; ++v) {
    Vec row(n);
    row[v] = 1;
    la.append_row(row);
    lg.append_row(zeros(6));
    lh.push_back(Rational(1));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational kr{Integer(k)};
    la.append_row(zeros(n));
    lg.append_row(split_row(Rational(-1), -kr, -kr * kr));
    lh.push_back(Rational(0));
  }
  inst.leader_a = std::move(la);
  inst.leader_g = std::move(lg);
  inst.leader_h = std::move(lh);
  inst.leader_cost_x = Vec(n, Rational(-1));
  inst.leader_cost_y = zeros(6);

  // Follower: for each vertex k the gadget-dual rows
  //   -x_k - (y1 + k y2 + k^2 y3) <= 0  and  x_k - 1 - (y1 + k y2 + k^2 y3) <= 0
  // on the split variables; the follower objective is zero, so every
  // feasible response is optimal.
  Matrix fa(0, n);
  Matrix fg(0, 6);
  Vec fh;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational kr{Integer(k)};
    Vec xrow(n);
    xrow[k - 1] = -1;
    fa.append_row(xrow);
    fg.append_row(split_row(Rational(-1), -kr, -kr * kr));
    fh.push_back(Rational(0));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational kr{Integer(k)};
    Vec xrow(n);
    xrow[k - 1] = 1;
    fa.append_row(xrow);
    fg.append_row(split_row(Rational(-1), -kr, -kr * kr));
    fh.push_back(Rational(1));
  }
  inst.follower_a = std::move(fa);
  inst.follower_g = std::move(fg);
  inst.follower_h = std::move(fh);
  inst.follower_cost = zeros(6);
  check_instance(inst);

  if (with_box) {
    const Rational bound = box_bound(inst, g);
    for (std::size_t col = 0; col < 6; ++col) {
      Vec row(6);
      row[col] = 1;
      inst.follower_a.append_row(zeros(n));
      inst.follower_g.append_row(row);
      inst.follower_h.push_back(bound);
    }
    inst.name += "-boxed";
    check_instance(inst);
    const ReductionReport report = verify_reduction_on(g, inst);
    if (!report.ok) {
      throw std::logic_error("boxed reduction failed re-verification");
    }
  }
  return inst;
}

MisResult solve_mis_bruteforce(const Graph& g) {
  check_graph(g);
  if (g.num_vertices > 20) {
    throw SizeGuardError("solve_mis_bruteforce: more than 20 vertices");
  }
  MisResult best;
  const std::size_t total = std::size_t(1) << g.num_vertices;
  for (std::size_t mask = 0; mask < total; ++mask) {
    bool independent = true;
    for (const auto& [i, j] : g.edges) {
      if ((mask >> i) & 1 && (mask >> j) & 1) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      if ((mask >> v) & 1) subset.push_back(v);
    }
    if (subset.size() > best.size ||
        (subset.size() == best.size && subset < best.witness)) {
      best.size = subset.size();
      best.witness = std::move(subset);
    }
  }
  return best;
}

ReductionReport verify_reduction_on(const Graph& g, const BlpInstance& inst) {
  check_graph(g);
  if (g.num_vertices > 6) {
    throw SizeGuardError("verify_reduction: more than 6 vertices");
  }
  ReductionReport report;
  report.mis_size = solve_mis_bruteforce(g).size;

  bool found_binary = false;
  const std::size_t total = std::size_t(1) << g.num_vertices;
  for (std::size_t mask = 0; mask < total; ++mask) {
    Vec x(g.num_vertices);
    std::size_t selected = 0;
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      if ((mask >> v) & 1) {
        x[v] = 1;
        ++selected;
      }
    }
    bool independent = true;
    for (const auto& [i, j] : g.edges) {
      if (x[i] == 1 && x[j] == 1) {
        independent = false;
        break;
      }
    }
    const PessimisticEvaluation eval = pessimistic_evaluate(inst, x);
    if (independent) {
      const Rational expected = -Rational(Integer(selected));
      if (!eval.feasible || eval.value != expected) {
        report.mismatches.push_back("independent set mask " +
                                    std::to_string(mask) +
                                    " not feasible with value -|S|");
        continue;
      }
      if (!found_binary || eval.value < report.best_binary_value) {
        report.best_binary_value = eval.value;
        found_binary = true;
      }
    } else if (eval.feasible) {
      report.mismatches.push_back("dependent set mask " + std::to_string(mask) +
                                  " evaluated feasible");
    }
  }

  // Fractional coordinates must be rejected by the gadget rows.
  const Rational fractions[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    for (const Rational& f : fractions) {
      Vec x = zeros(g.num_vertices);
      x[v] = f;
      if (pessimistic_evaluate(inst, x).feasible) {
        report.mismatches.push_back("fractional point on vertex " +
                                    std::to_string(v) + " evaluated feasible");
      }
    }
  }

  if (found_binary &&
      -report.best_binary_value != Rational(Integer(report.mis_size))) {
    report.mismatches.push_back("best binary value disagrees with MIS size");
  }
  report.ok = found_binary && report.mismatches.empty();
  return report;
}

ReductionReport verify_reduction(const Graph& g) {
  return verify_reduction_on(g, reduce_mis(g));
}

}  // namespace blp
