#include "blp/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace blp {

Hyperplane make_hyperplane(Vec normal, Rational offset) {
  std::size_t lead = normal.size();
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == normal.size()) {
    throw DimensionError("hyperplane: zero normal");
  }
  const Rational scale_by = normal[lead];
  for (auto& v : normal) v /= scale_by;
  offset /= scale_by;
  return Hyperplane{std::move(normal), std::move(offset)};
}

std::vector<Hyperplane> dedup_hyperplanes(std::vector<Hyperplane> hs) {
  for (auto& h : hs) h = make_hyperplane(h.normal, h.offset);
  auto less = [](const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  };
  std::sort(hs.begin(), hs.end(), less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

int side_of(const Hyperplane& h, const Vec& u) {
  const Rational v = dot(h.normal, u) - h.offset;
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

namespace {

// Widest strictly-interior margin for a partial sign assignment: maximize s
// subject to the box, sign * (n.u - o) >= s on signed hyperplanes and
// n.u = o on zero-signed ones. A cell/face with this sign prefix exists in
// the box iff the optimum is positive (cells) or feasible (faces with s
// ranging over the nonzero signs only).
struct MarginLp {
  const HPolyhedron& box;
  const std::vector<Hyperplane>& hs;

  std::optional<Vec> solve(const std::vector<int>& signs) const {
    const std::size_t d = box.dim();
    LpProblem lp;
    lp.sense = Sense::Maximize;
    lp.objective = zeros(d + 1);
    lp.objective[d] = 1;
    lp.domains.assign(d + 1, VarDomain::Free);

    Matrix rows(0, d + 1);
    Vec rhs;
    for (std::size_t i = 0; i < box.num_rows(); ++i) {
      Vec row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = box.a(i, j);
      rows.append_row(row);
      rhs.push_back(box.b[i]);
    }
    for (std::size_t h = 0; h < signs.size(); ++h) {
      Vec row(d + 1);
      if (signs[h] == 0) {
        for (std::size_t j = 0; j < d; ++j) row[j] = hs[h].normal[j];
        rows.append_row(row);
        rhs.push_back(hs[h].offset);
        for (std::size_t j = 0; j < d; ++j) row[j] = -hs[h].normal[j];
        rows.append_row(row);
        rhs.push_back(-hs[h].offset);
      } else {
        const Rational sgn = signs[h];
        for (std::size_t j = 0; j < d; ++j) row[j] = -sgn * hs[h].normal[j];
        row[d] = 1;
        rows.append_row(row);
        rhs.push_back(-sgn * hs[h].offset);
      }
    }
    {
      Vec row(d + 1);
      row[d] = 1;
      rows.append_row(row);
      rhs.push_back(1);
    }
    lp.constraints = std::move(rows);
    lp.rhs = std::move(rhs);
    lp.relations.assign(lp.rhs.size(), Relation::LessEq);

    LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::Unbounded) {
      throw std::logic_error("arrangement: bounding box is unbounded");
    }
    if (out.status != LpStatus::Optimal || out.value <= 0) return std::nullopt;
    Vec point(d);
    for (std::size_t j = 0; j < d; ++j) point[j] = out.primal_point[j];
    return point;
  }
};

HPolyhedron closure_of(const HPolyhedron& box,
                       const std::vector<Hyperplane>& hs,
                       const std::vector<int>& signs) {
  Matrix a = box.a;
  Vec b = box.b;
  for (std::size_t h = 0; h < signs.size(); ++h) {
    if (signs[h] >= 0) {
      a.append_row(scale(hs[h].normal, Rational(-1)));
      b.push_back(-hs[h].offset);
    }
    if (signs[h] <= 0) {
      a.append_row(hs[h].normal);
      b.push_back(hs[h].offset);
    }
  }
  return HPolyhedron{std::move(a), std::move(b), box.nonneg};
}

void search(const MarginLp& lp, const std::vector<Hyperplane>& hs,
            const HPolyhedron& box, std::vector<int>& signs, bool with_zeros,
            std::vector<ArrangementCell>& out) {
  auto point = lp.solve(signs);
  if (!point) return;
  if (signs.size() == hs.size()) {
    if (with_zeros &&
        std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; })) {
      return;  // proper faces only
    }
    out.push_back(ArrangementCell{signs, std::move(*point),
                                  closure_of(box, hs, signs)});
    return;
  }
  static constexpr int kCellBranches[] = {-1, 1};
  static constexpr int kFaceBranches[] = {-1, 0, 1};
  const auto* branches = with_zeros ? kFaceBranches : kCellBranches;
  const std::size_t count = with_zeros ? 3 : 2;
  for (std::size_t i = 0; i < count; ++i) {
    signs.push_back(branches[i]);
    search(lp, hs, box, signs, with_zeros, out);
    signs.pop_back();
  }
}

}  // namespace

Arrangement enumerate_cells(const std::vector<Hyperplane>& hs, std::size_t dim,
                            const HPolyhedron& bounding_box) {
  if (bounding_box.dim() != dim) {
    throw DimensionError("enumerate_cells: box dimension mismatch");
  }
  Arrangement arr;
  arr.hyperplanes = dedup_hyperplanes(hs);
  MarginLp lp{bounding_box, arr.hyperplanes};
  std::vector<int> signs;
  search(lp, arr.hyperplanes, bounding_box, signs, /*with_zeros=*/false,
         arr.cells);
  return arr;
}

std::vector<ArrangementCell> enumerate_faces(
    const std::vector<Hyperplane>& canonical, std::size_t dim,
    const HPolyhedron& bounding_box) {
  if (bounding_box.dim() != dim) {
    throw DimensionError("enumerate_faces: box dimension mismatch");
  }
  MarginLp lp{bounding_box, canonical};
  std::vector<ArrangementCell> faces;
  std::vector<int> signs;
  search(lp, canonical, bounding_box, signs, /*with_zeros=*/true, faces);
  return faces;
}

bool cell_contains(const ArrangementCell& cell, const Vec& point) {
  return contains(cell.closure, point);
}

std::string sign_vector_string(const std::vector<int>& signs) {
  std::string out;
  out.reserve(signs.size());
  for (int s : signs) out += s > 0 ? '+' : s < 0 ? '-' : '0';
  return out;
}

}  // namespace blp
