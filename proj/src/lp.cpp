#include "blp/lp.hpp"

#include <stdexcept>

namespace blp {

namespace {

LpGlobalStats g_stats;

struct StandardForm {
  // Normalized rows: sign[i] * (original row i), so every rhs is >= 0.
  std::vector<int> row_sign;
  // Column layout: structural columns first (one per nonnegative variable,
  // two per free variable: +A_j then -A_j), then slack/surplus columns,
  // then one artificial column per row.
  Matrix tableau;  // m x (num_cols + 1); last column holds the rhs
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;
  std::size_t art_start = 0;
  Vec cost_phase2;                     // artificial costs are zero
  std::vector<std::size_t> var_col;    // original var -> first column
  std::vector<bool> var_is_split;
};

StandardForm build_standard_form(const LpProblem& p, const Vec& min_objective) {
  const std::size_t m = p.num_rows();
  const std::size_t n = p.num_vars();

  StandardForm sf;
  sf.row_sign.resize(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.rhs[i] < 0) sf.row_sign[i] = -1;
  }

  sf.var_col.resize(n);
  sf.var_is_split.resize(n);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    sf.var_col[j] = col;
    sf.var_is_split[j] = p.domains[j] == VarDomain::Free;
    col += sf.var_is_split[j] ? 2 : 1;
  }
  const std::size_t slack_start = col;
  std::size_t num_slacks = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (p.relations[i] != Relation::Equal) ++num_slacks;
  }
  sf.art_start = slack_start + num_slacks;
  sf.num_cols = sf.art_start + m;

  sf.tableau = Matrix(m, sf.num_cols + 1);
  sf.cost_phase2 = zeros(sf.num_cols);
  std::size_t slack = slack_start;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sgn = sf.row_sign[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational entry = sgn * p.constraints(i, j);
      sf.tableau(i, sf.var_col[j]) = entry;
      if (sf.var_is_split[j]) sf.tableau(i, sf.var_col[j] + 1) = -entry;
    }
    Relation rel = p.relations[i];
    if (sf.row_sign[i] < 0) {
      if (rel == Relation::LessEq) rel = Relation::GreaterEq;
      else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
    }
    if (rel == Relation::LessEq) {
      sf.tableau(i, slack++) = 1;
    } else if (rel == Relation::GreaterEq) {
      sf.tableau(i, slack++) = -1;
    }
    sf.tableau(i, sf.art_start + i) = 1;
    sf.tableau(i, sf.num_cols) = sgn * p.rhs[i];
  }

  for (std::size_t j = 0; j < n; ++j) {
    sf.cost_phase2[sf.var_col[j]] = min_objective[j];
    if (sf.var_is_split[j]) sf.cost_phase2[sf.var_col[j] + 1] = -min_objective[j];
  }

  sf.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) sf.basis[i] = sf.art_start + i;
  return sf;
}

void pivot(StandardForm& sf, std::size_t row, std::size_t col) {
  Matrix& t = sf.tableau;
  const Rational pivot_value = t(row, col);
  for (std::size_t j = 0; j <= sf.num_cols; ++j) {
    if (t(row, j) != 0) t(row, j) /= pivot_value;
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (i == row || t(i, col) == 0) continue;
    const Rational factor = t(i, col);
    for (std::size_t j = 0; j <= sf.num_cols; ++j) {
      if (t(row, j) != 0) t(i, j) -= factor * t(row, j);
    }
  }
  sf.basis[row] = col;
}

enum class IterateResult { Optimal, Unbounded };

// Bland's rule: entering column = least index with negative reduced cost,
// leaving row = least basic index among minimum ratios. Artificial columns
// never enter; once nonbasic they stay at zero.
IterateResult run_simplex(StandardForm& sf, const Vec& cost,
                          std::size_t* unbounded_col) {
  const std::size_t m = sf.tableau.rows();
  for (;;) {
    Vec dual_times_col(m);
    for (std::size_t i = 0; i < m; ++i) dual_times_col[i] = cost[sf.basis[i]];

    std::size_t entering = sf.num_cols;
    for (std::size_t j = 0; j < sf.art_start; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (sf.tableau(i, j) != 0) reduced -= dual_times_col[i] * sf.tableau(i, j);
      }
      if (reduced < 0) {
        entering = j;
        break;
      }
    }
    if (entering == sf.num_cols) return IterateResult::Optimal;

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& coeff = sf.tableau(i, entering);
      if (coeff <= 0) continue;
      Rational ratio = sf.tableau(i, sf.num_cols) / coeff;
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && sf.basis[i] < sf.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) {
      if (unbounded_col != nullptr) *unbounded_col = entering;
      return IterateResult::Unbounded;
    }
    pivot(sf, leaving, entering);
  }
}

Vec standard_duals(const StandardForm& sf, const Vec& cost) {
  const std::size_t m = sf.tableau.rows();
  Vec y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
      acc += cost[sf.basis[k]] * sf.tableau(k, sf.art_start + i);
    }
    y[i] = acc;
  }
  return y;
}

Vec recover_point(const StandardForm& sf, const LpProblem& p) {
  Vec std_values(sf.num_cols);
  for (std::size_t i = 0; i < sf.tableau.rows(); ++i) {
    std_values[sf.basis[i]] = sf.tableau(i, sf.num_cols);
  }
  Vec x(p.num_vars());
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    x[j] = std_values[sf.var_col[j]];
    if (sf.var_is_split[j]) x[j] -= std_values[sf.var_col[j] + 1];
  }
  return x;
}

void certification_failure(const std::string& what) {
  ++g_stats.certification_failures;
  throw std::logic_error("lp certificate check failed: " + what);
}

void certify_optimal(const LpProblem& p, const LpOutcome& out) {
  const bool minimize = p.sense == Sense::Minimize;
  // Primal feasibility.
  Vec row_values = matvec(p.constraints, out.primal_point);
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const bool ok = p.relations[i] == Relation::LessEq
                        ? row_values[i] <= p.rhs[i]
                        : p.relations[i] == Relation::GreaterEq
                              ? row_values[i] >= p.rhs[i]
                              : row_values[i] == p.rhs[i];
    if (!ok) certification_failure("primal infeasibility at row " + std::to_string(i));
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (p.domains[j] == VarDomain::NonNegative && out.primal_point[j] < 0) {
      certification_failure("negative variable " + std::to_string(j));
    }
  }
  if (dot(p.objective, out.primal_point) != out.value) {
    certification_failure("objective value mismatch");
  }
  // Dual feasibility and strong duality.
  if (dot(p.rhs, out.dual_point) != out.value) {
    certification_failure("strong duality violated");
  }
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const Rational& y = out.dual_point[i];
    if (p.relations[i] == Relation::LessEq && (minimize ? y > 0 : y < 0)) {
      certification_failure("dual sign at row " + std::to_string(i));
    }
    if (p.relations[i] == Relation::GreaterEq && (minimize ? y < 0 : y > 0)) {
      certification_failure("dual sign at row " + std::to_string(i));
    }
    if (y != 0 && row_values[i] != p.rhs[i]) {
      certification_failure("complementary slackness at row " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    Rational reduced = p.objective[j];
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      reduced -= p.constraints(i, j) * out.dual_point[i];
    }
    if (p.domains[j] == VarDomain::Free) {
      if (reduced != 0) certification_failure("free-variable reduced cost");
    } else if (minimize ? reduced < 0 : reduced > 0) {
      certification_failure("dual infeasibility at column " + std::to_string(j));
    }
    if (out.primal_point[j] != 0 && reduced != 0) {
      certification_failure("complementary slackness at column " + std::to_string(j));
    }
  }
  ++g_stats.optimal_certified;
}

void certify_ray(const LpProblem& p, const Vec& ray) {
  Vec direction = matvec(p.constraints, ray);
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const bool ok = p.relations[i] == Relation::LessEq
                        ? direction[i] <= 0
                        : p.relations[i] == Relation::GreaterEq
                              ? direction[i] >= 0
                              : direction[i] == 0;
    if (!ok) certification_failure("ray not a recession direction");
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    if (p.domains[j] == VarDomain::NonNegative && ray[j] < 0) {
      certification_failure("ray leaves the nonnegative orthant");
    }
  }
  const Rational improvement = dot(p.objective, ray);
  if (p.sense == Sense::Minimize ? improvement >= 0 : improvement <= 0) {
    certification_failure("ray does not improve the objective");
  }
}

void certify_farkas(const LpProblem& p, const Vec& farkas) {
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (p.relations[i] == Relation::LessEq && farkas[i] > 0) {
      certification_failure("farkas sign at row " + std::to_string(i));
    }
    if (p.relations[i] == Relation::GreaterEq && farkas[i] < 0) {
      certification_failure("farkas sign at row " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      acc += p.constraints(i, j) * farkas[i];
    }
    if (p.domains[j] == VarDomain::Free ? acc != 0 : acc > 0) {
      certification_failure("farkas aggregation at column " + std::to_string(j));
    }
  }
  if (dot(p.rhs, farkas) <= 0) {
    certification_failure("farkas certificate not separating");
  }
}

}  // namespace

void check_problem(const LpProblem& p) {
  const std::size_t n = p.objective.size();
  const std::size_t m = p.rhs.size();
  if (p.constraints.rows() != m || (m > 0 && p.constraints.cols() != n)) {
    throw DimensionError("lp: constraint matrix shape mismatch");
  }
  if (p.relations.size() != m) {
    throw DimensionError("lp: relation count mismatch");
  }
  if (p.domains.size() != n) {
    throw DimensionError("lp: variable domain count mismatch");
  }
}

const LpGlobalStats& lp_global_stats() { return g_stats; }
void reset_lp_global_stats() { g_stats = LpGlobalStats{}; }

LpOutcome solve_lp(const LpProblem& p) {
  check_problem(p);
  ++g_stats.solves;

  const bool minimize = p.sense == Sense::Minimize;
  Vec min_objective = minimize ? p.objective : scale(p.objective, Rational(-1));

  StandardForm sf = build_standard_form(p, min_objective);
  const std::size_t m = sf.tableau.rows();

  // Phase 1: drive artificials to zero.
  Vec cost_phase1 = zeros(sf.num_cols);
  for (std::size_t i = 0; i < m; ++i) cost_phase1[sf.art_start + i] = 1;
  run_simplex(sf, cost_phase1, nullptr);

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    infeasibility += cost_phase1[sf.basis[i]] * sf.tableau(i, sf.num_cols);
  }
  if (infeasibility > 0) {
    Vec y = standard_duals(sf, cost_phase1);
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.farkas[i] = sf.row_sign[i] * y[i];
    certify_farkas(p, out.farkas);
    return out;
  }

  // Pivot remaining artificials out of the basis; rows that resist are
  // identically zero and stay inert through phase 2.
  for (std::size_t i = 0; i < m; ++i) {
    if (sf.basis[i] < sf.art_start) continue;
    for (std::size_t j = 0; j < sf.art_start; ++j) {
      if (sf.tableau(i, j) != 0) {
        pivot(sf, i, j);
        break;
      }
    }
  }

  std::size_t unbounded_col = 0;
  const IterateResult result = run_simplex(sf, sf.cost_phase2, &unbounded_col);

  if (result == IterateResult::Unbounded) {
    Vec std_ray(sf.num_cols);
    std_ray[unbounded_col] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      std_ray[sf.basis[i]] = -sf.tableau(i, unbounded_col);
    }
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.ray.resize(p.num_vars());
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      out.ray[j] = std_ray[sf.var_col[j]];
      if (sf.var_is_split[j]) out.ray[j] -= std_ray[sf.var_col[j] + 1];
    }
    certify_ray(p, out.ray);
    return out;
  }

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.primal_point = recover_point(sf, p);
  out.value = dot(p.objective, out.primal_point);
  Vec y = standard_duals(sf, sf.cost_phase2);
  out.dual_point.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.dual_point[i] = sf.row_sign[i] * y[i];
    if (!minimize) out.dual_point[i] = -out.dual_point[i];
  }
  certify_optimal(p, out);
  return out;
}

}  // namespace blp
