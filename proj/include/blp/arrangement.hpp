#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blp/polyhedron.hpp"

namespace blp {

/// Oriented hyperplane {u : normal . u = offset} in canonical form: the
/// first nonzero entry of the normal equals 1, so coincident hyperplanes
/// (either orientation) compare equal structurally.
struct Hyperplane {
  Vec normal;
  Rational offset;

  bool operator==(const Hyperplane& other) const = default;
};

/// Throws DimensionError when the normal is all zero.
Hyperplane make_hyperplane(Vec normal, Rational offset);

/// Canonicalizes, deduplicates and sorts lexicographically.
std::vector<Hyperplane> dedup_hyperplanes(std::vector<Hyperplane> hs);

/// Sign of a point against a hyperplane: -1, 0 or +1.
int side_of(const Hyperplane& h, const Vec& u);

/// A relatively open region of the arrangement within the bounding box.
/// Cells carry strictly nonzero signs; faces (strict mode) have zeros on the
/// hyperplanes they lie in. The closure conjoins the bounding box with the
/// closed halfspaces (or equalities) given by the sign vector; interior_point
/// satisfies every nonzero sign strictly and every zero sign exactly.
struct ArrangementCell {
  std::vector<int> signs;
  Vec interior_point;
  HPolyhedron closure;
};

struct Arrangement {
  std::vector<Hyperplane> hyperplanes;  // canonical, deduplicated, sorted
  std::vector<ArrangementCell> cells;   // sorted by sign vector, '-' before '+'
};

/// Enumerates the full-dimensional cells of the arrangement restricted to a
/// bounded, full-dimensional box, by recursive sign-vector search with exact
/// LP feasibility pruning. Deterministic: cells ordered by sign vector.
Arrangement enumerate_cells(const std::vector<Hyperplane>& hs, std::size_t dim,
                            const HPolyhedron& bounding_box);

/// Enumerates the proper faces (sign vectors with at least one zero) that
/// are nonempty within the box, each with a relative-interior point.
std::vector<ArrangementCell> enumerate_faces(
    const std::vector<Hyperplane>& canonical, std::size_t dim,
    const HPolyhedron& bounding_box);

/// Closure membership.
bool cell_contains(const ArrangementCell& cell, const Vec& point);

std::string sign_vector_string(const std::vector<int>& signs);

}  // namespace blp
