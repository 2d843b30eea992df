#pragma once

#include <vector>

#include "blp/lp.hpp"

namespace blp {

/// H-representation {x : a x <= b, x_i >= 0 for flagged i}.
struct HPolyhedron {
  Matrix a;
  Vec b;
  std::vector<bool> nonneg;  // one flag per variable

  std::size_t dim() const { return nonneg.size(); }
  std::size_t num_rows() const { return b.size(); }
};

HPolyhedron make_polyhedron(Matrix a, Vec b, std::vector<bool> nonneg);

/// Axis-aligned box {lo <= x <= hi}, all variables free.
HPolyhedron make_box(const Vec& lo, const Vec& hi);

bool contains(const HPolyhedron& p, const Vec& x);

/// All rows of the polyhedron as homogeneous inequalities row . x <= rhs,
/// the explicit rows first, then -x_i <= 0 for each flagged variable.
struct InequalityRows {
  Matrix coeffs;
  Vec rhs;
};
InequalityRows inequality_rows(const HPolyhedron& p);

/// LP over the polyhedron. Flagged variables are nonnegative, the rest free.
LpOutcome optimize(const HPolyhedron& p, const Vec& objective, Sense sense);

bool is_empty(const HPolyhedron& p);

/// All extreme points, each once, sorted lexicographically. Works on
/// unbounded polyhedra (rays are not reported). Enumerates every dim-sized
/// subset of the inequality rows, solves the square system, and keeps
/// solutions satisfying the remaining inequalities.
std::vector<Vec> enumerate_vertices(const HPolyhedron& p);

/// Intersection of two H-representations over the same variables.
HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q);

}  // namespace blp
