#pragma once

#include <optional>

#include "blp/arrangement.hpp"
#include "blp/optimistic.hpp"

namespace blp {

/// Basis of a parametric extreme point: dim-many constraint indices with a
/// nonsingular coefficient stack; required_index (the value-equality row)
/// must be a member when present.
struct Basis {
  std::vector<std::size_t> indices;
  std::optional<std::size_t> required_index;
};

/// Every subset of the given coefficient rows of size dim that contains
/// required_index (when set) and stacks to a nonsingular matrix, in
/// lexicographic order.
std::vector<Basis> enumerate_candidate_bases(
    const Matrix& rows, std::size_t dim,
    std::optional<std::size_t> required_index);

enum class LiftedMode { WT, XT };

/// The lifted parameter space of the pessimistic reformulation: (w, t) with
/// w = A_f x (WT mode) or (x, t) directly (XT mode); the t coordinate is
/// dropped when d_f = 0, where the value function is identically zero.
struct LiftedSpace {
  LiftedMode mode = LiftedMode::WT;
  bool has_t = true;
  std::size_t base_dim = 0;
  std::size_t dim = 0;
  HPolyhedron bounding_box;
};

/// Affine function of the lifted variables.
struct AffineForm {
  Vec coeff;
  Rational constant;
};

Rational affine_eval(const AffineForm& f, const Vec& u);

/// One row of the parametric reaction set: v_coeff . v (= | <=) rhs(u).
struct LiftedConstraint {
  Vec v_coeff;
  AffineForm rhs;
  bool is_equality = false;
};

/// Parametric extreme point v(u) = coeff u + offset for one basis.
struct VertexMap {
  Basis basis;
  Matrix coeff;  // n_f x lifted dim
  Vec offset;
};

Vec vertex_at(const VertexMap& map, const Vec& u);

/// Constraint table and all candidate-basis vertex maps of the parametric
/// reaction set in the given mode. Box-independent.
struct LiftedBasisSystem {
  bool has_t = true;
  std::size_t dim = 0;
  std::vector<LiftedConstraint> constraints;
  std::vector<VertexMap> maps;
};

LiftedBasisSystem build_basis_system(const BlpInstance& inst, LiftedMode mode);

/// Feasibility of the basis vertex at a lifted point: all non-active rows
/// hold exactly.
bool basis_feasible_at(const VertexMap& map,
                       const std::vector<LiftedConstraint>& constraints,
                       const Vec& u);

/// The affine functional u -> row . v(u) - rhs(u) whose nonpositive side is
/// the feasibility region of the row for this vertex map.
AffineForm basis_row_violation(const VertexMap& map,
                               const LiftedConstraint& row, std::size_t dim);

/// Bounding box for the arrangement: coordinatewise LP bounds of the lifted
/// image over the high-point relaxation, widened by one on each side.
/// Throws A1ViolationError when a bound is infinite.
LiftedSpace make_lifted_space(const BlpInstance& inst, LiftedMode mode);

/// Basis-feasibility boundaries as canonical deduplicated hyperplanes in the
/// lifted space. Rows whose boundary does not depend on the lifted point
/// contribute no hyperplane.
std::vector<Hyperplane> build_hyperplanes(const BlpInstance& inst,
                                          const LiftedSpace& space,
                                          const std::vector<VertexMap>& maps);

/// Rewrites a pessimistic objective term d_l . y* into a coupling row with
/// an epigraph variable appended to the leader, leaving the objective
/// independent of the follower response. Identity when d_l = 0. The epigraph
/// variable is boxed by LP bounds over the high-point relaxation to keep the
/// extended leader set bounded (A1ViolationError when those LPs are
/// unbounded); a negative lower bound is absorbed through an auxiliary
/// variable pinned to one, so all leader variables stay nonnegative.
BlpInstance normalize_epigraph(const BlpInstance& inst);

struct PessimisticOptions {
  std::optional<LiftedMode> space;  // default: smallest lifted dimension
  bool strict_faces = false;
  bool force = false;
};

struct PessimisticResult {
  BilevelStatus status = BilevelStatus::Infeasible;
  Rational value;
  Vec x;  // original leader variables
  std::vector<int> cell_sign_vector;
  std::optional<std::size_t> piece_index;
  bool verified_pointwise = false;
  struct Counts {
    std::uint64_t cells = 0;
    std::uint64_t bases = 0;
    std::uint64_t lp_solves = 0;
  };
  Counts counts;
  std::vector<std::vector<std::size_t>> active_bases;  // winning cell's bases
};

/// Raised when every subproblem optimum fails pointwise re-verification.
struct NoVerifiedCandidateError : std::runtime_error {
  explicit NoVerifiedCandidateError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Pessimistic solver: epigraph normalization, lift to (w, t) or (x, t),
/// hyperplane arrangement over the lifted space, one LP per (cell, piece)
/// with the per-cell feasible bases enforcing every coupling row, exact
/// minimum over subproblems, and mandatory pointwise re-verification of the
/// winner (fallback to the next-best candidate on failure).
PessimisticResult solve_pessimistic(const BlpInstance& inst,
                                    const PessimisticOptions& options = {});

}  // namespace blp
