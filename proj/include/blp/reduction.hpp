#pragma once

#include "blp/instance_io.hpp"
#include "blp/oracle.hpp"

namespace blp {

/// The three moment rows sum tau = 1, sum i tau_i = k, sum i^2 tau_i = k^2
/// over tau_i = lambda_i + lambdabar_i, whose unique nonnegative solution is
/// the indicator of k. Vertex indices are 1-based here.
struct GadgetSystem {
  std::size_t k = 0;
  std::size_t lambda_dim = 0;  // |V|, for each of lambda and lambdabar
  Matrix equality_rows;        // 3 x |V|, coefficients on tau
  Vec equality_rhs;            // (1, k, k^2)
};

GadgetSystem build_gadget(std::size_t k, std::size_t num_vertices);

/// The enforcement LP of the gadget at a leader point x:
///   min x.lambda + (1 - x).lambdabar  s.t. the moment rows on lambda +
///   lambdabar, both nonnegative.
/// Returns its exact optimal value, min(x_k, 1 - x_k).
Rational gadget_lp_value(const GadgetSystem& gadget, const Vec& x);

/// Encodes a maximum-independent-set instance as a pessimistic bilevel
/// program with six follower variables: leader variables select vertices
/// (edge rows and unit bounds), each vertex contributes one coupling row
/// whose reaction maximum dualizes the gadget LP, and the follower carries
/// the gadget's dual with free variables split into nonnegative pairs.
/// The follower set is unbounded by construction, so the generated instance
/// validates as relaxed. With with_box, bounds |y| <= M are appended with M
/// derived per instance so every binary evaluation is preserved.
BlpInstance reduce_mis(const Graph& g, bool with_box = false);

struct MisResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
};

/// Exhaustive maximum independent set; lexicographically smallest witness
/// among maximizers. Guard: |V| <= 20.
MisResult solve_mis_bruteforce(const Graph& g);

struct ReductionReport {
  bool ok = false;
  std::size_t mis_size = 0;
  Rational best_binary_value;  // pessimistic objective over binary points
  std::vector<std::string> mismatches;
};

/// Round-trip verification of the reduction on a small graph: every binary
/// independent-set indicator is pessimistically feasible with objective
/// -|S|, non-independent or fractional points are infeasible, and the best
/// binary objective matches the brute-force optimum. Guard: |V| <= 6.
ReductionReport verify_reduction(const Graph& g);

/// Same checks against a caller-supplied encoding of the graph (used to
/// re-verify boxed instances).
ReductionReport verify_reduction_on(const Graph& g, const BlpInstance& inst);

}  // namespace blp
