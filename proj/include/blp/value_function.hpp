#pragma once

#include "blp/instance.hpp"

namespace blp {

/// Raised when a solver-level precondition fails (wrong sense, mismatched
/// costs, A1 refusal and friends). The message names the condition.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when the instance data contradicts the boundedness half of A1 in
/// a place the algorithm cannot continue through.
struct A1ViolationError : std::runtime_error {
  explicit A1ViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Multiplier polytope of the follower dual: {lambda >= 0 : -G_f^T lambda <= d_f},
/// ambient dimension m_f. Pointed, so finite LP optima over it sit at
/// extreme points.
HPolyhedron dual_polytope(const BlpInstance& inst);

/// One affine piece of the follower value function. The piece evaluates to
/// slope . x + offset, with slope = A_f^T lambda and offset = -h_f . lambda
/// for the generating dual extreme point lambda.
struct PwlPiece {
  Vec lambda;
  Vec slope;
  Rational offset;
};

/// The follower value function as a max of affine pieces, one per retained
/// extreme point of the dual polytope. Exact wherever Y(x) is nonempty.
struct PwlConvexFunction {
  std::vector<PwlPiece> pieces;
};

/// Builds the piecewise-linear representation by dual vertex enumeration.
/// Pieces with identical (slope, offset) are merged. Throws A1ViolationError
/// when the dual polytope is empty (the follower LP would be unbounded).
PwlConvexFunction build_pwl(const BlpInstance& inst);

Rational pwl_eval(const PwlConvexFunction& f, const Vec& x);

enum class EvalStatus { Ok, InfeasibleAt, Unbounded };

struct PhiResult {
  EvalStatus status = EvalStatus::InfeasibleAt;
  Rational value;
  Vec minimizer;  // a follower-optimal point when status == Ok
};

/// Direct LP evaluation of the follower value function at x >= 0.
/// InfeasibleAt when Y(x) is empty; Unbounded surfaces an A1 violation.
PhiResult eval_phi_direct(const BlpInstance& inst, const Vec& x);

struct ReactionMax {
  EvalStatus status = EvalStatus::InfeasibleAt;
  Rational value;
  Vec maximizer;
};

/// Exact maximum of objective . y over the reaction set R(x), encoded with
/// the inequality form d_f . y <= phi(x) (use_equality switches to the
/// equality form; the two agree).
ReactionMax reaction_max(const BlpInstance& inst, const Vec& x,
                         const Vec& objective, bool use_equality = false);

}  // namespace blp
