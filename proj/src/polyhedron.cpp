#include "blp/polyhedron.hpp"

#include <algorithm>

namespace blp {

HPolyhedron make_polyhedron(Matrix a, Vec b, std::vector<bool> nonneg) {
  if (a.rows() != b.size()) {
    throw DimensionError("polyhedron: row count mismatch");
  }
  if (a.rows() > 0 && a.cols() != nonneg.size()) {
    throw DimensionError("polyhedron: column count mismatch");
  }
  if (a.rows() == 0) a = Matrix(0, nonneg.size());
  return HPolyhedron{std::move(a), std::move(b), std::move(nonneg)};
}

HPolyhedron make_box(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size()) throw DimensionError("box: bound size mismatch");
  const std::size_t d = lo.size();
  Matrix a(2 * d, d);
  Vec b(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    a(2 * i, i) = 1;
    b[2 * i] = hi[i];
    a(2 * i + 1, i) = -1;
    b[2 * i + 1] = -lo[i];
  }
  return HPolyhedron{std::move(a), std::move(b), std::vector<bool>(d, false)};
}

bool contains(const HPolyhedron& p, const Vec& x) {
  if (x.size() != p.dim()) throw DimensionError("contains: point dimension");
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < p.dim(); ++j) acc += p.a(i, j) * x[j];
    if (acc > p.b[i]) return false;
  }
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (p.nonneg[j] && x[j] < 0) return false;
  }
  return true;
}

InequalityRows inequality_rows(const HPolyhedron& p) {
  InequalityRows rows;
  rows.coeffs = p.a;
  rows.rhs = p.b;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (!p.nonneg[j]) continue;
    Vec row(p.dim());
    row[j] = -1;
    rows.coeffs.append_row(row);
    rows.rhs.push_back(0);
  }
  return rows;
}

LpOutcome optimize(const HPolyhedron& p, const Vec& objective, Sense sense) {
  LpProblem lp;
  lp.sense = sense;
  lp.objective = objective;
  lp.constraints = p.a;
  lp.rhs = p.b;
  lp.relations.assign(p.num_rows(), Relation::LessEq);
  lp.domains.resize(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) {
    lp.domains[j] = p.nonneg[j] ? VarDomain::NonNegative : VarDomain::Free;
  }
  return solve_lp(lp);
}

bool is_empty(const HPolyhedron& p) {
  return optimize(p, zeros(p.dim()), Sense::Minimize).status ==
         LpStatus::Infeasible;
}

std::vector<Vec> enumerate_vertices(const HPolyhedron& p) {
  const std::size_t d = p.dim();
  InequalityRows rows = inequality_rows(p);
  const std::size_t m = rows.rhs.size();
  std::vector<Vec> vertices;
  if (d == 0 || m < d) return vertices;

  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    Matrix sys(d, d);
    Vec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) sys(i, j) = rows.coeffs(pick[i], j);
      rhs[i] = rows.rhs[pick[i]];
    }
    if (auto point = solve_square_system(sys, rhs)) {
      bool feasible = true;
      for (std::size_t i = 0; i < m && feasible; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < d; ++j) acc += rows.coeffs(i, j) * (*point)[j];
        feasible = acc <= rows.rhs[i];
      }
      if (feasible) vertices.push_back(std::move(*point));
    }
    // next lexicographic combination
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == m - d + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }

  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim() != q.dim()) throw DimensionError("intersect: dimension mismatch");
  Matrix a = p.a;
  Vec b = p.b;
  for (std::size_t i = 0; i < q.num_rows(); ++i) {
    a.append_row(q.a.row(i));
    b.push_back(q.b[i]);
  }
  std::vector<bool> nonneg(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) nonneg[j] = p.nonneg[j] || q.nonneg[j];
  return HPolyhedron{std::move(a), std::move(b), std::move(nonneg)};
}

}  // namespace blp
