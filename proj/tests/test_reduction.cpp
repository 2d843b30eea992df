#include <doctest.h>

#include "blp/reduction.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("reduction");

namespace {

Graph path(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.edges.push_back({0, n - 1});
  check_graph(g);
  return g;
}

}  // namespace

TEST_CASE("gadget moment system pins the indicator") {
  const GadgetSystem gadget = build_gadget(1, 2);
  CHECK(gadget.equality_rows ==
        Matrix{{q(1), q(1)}, {q(1), q(2)}, {q(1), q(4)}});
  CHECK(gadget.equality_rhs == Vec{q(1), q(1), q(1)});

  // LP check: min and max of each tau coordinate over the system both equal
  // the indicator of k.
  for (std::size_t num_vertices = 1; num_vertices <= 4; ++num_vertices) {
    for (std::size_t k = 1; k <= num_vertices; ++k) {
      const GadgetSystem s = build_gadget(k, num_vertices);
      for (std::size_t coord = 0; coord < num_vertices; ++coord) {
        LpProblem lp;
        lp.objective = zeros(num_vertices);
        lp.objective[coord] = 1;
        lp.constraints = s.equality_rows;
        lp.rhs = s.equality_rhs;
        lp.relations.assign(3, Relation::Equal);
        lp.domains.assign(num_vertices, VarDomain::NonNegative);
        lp.sense = Sense::Minimize;
        const LpOutcome low = solve_lp(lp);
        lp.sense = Sense::Maximize;
        const LpOutcome high = solve_lp(lp);
        REQUIRE(low.status == LpStatus::Optimal);
        REQUIRE(high.status == LpStatus::Optimal);
        const Rational expected = coord + 1 == k ? q(1) : q(0);
        CHECK(low.value == expected);
        CHECK(high.value == expected);
      }
    }
  }
}

TEST_CASE("gadget LP value is min(x_k, 1 - x_k)") {
  const GadgetSystem gadget = build_gadget(1, 2);
  CHECK(gadget_lp_value(gadget, {q(1, 2), q(0)}) == q(1, 2));
  CHECK(gadget_lp_value(gadget, {q(0), q(1)}) == 0);
  CHECK(gadget_lp_value(gadget, {q(1), q(1, 3)}) == 0);
  CHECK(gadget_lp_value(gadget, {q(1, 4), q(1)}) == q(1, 4));
  CHECK_THROWS_AS(build_gadget(0, 2), PreconditionError);
  CHECK_THROWS_AS(build_gadget(3, 2), PreconditionError);
}

TEST_CASE("reduction dimensions for the single edge") {
  const BlpInstance inst = reduce_mis(Graph{2, {{0, 1}}});
  CHECK(inst.sense == ProblemSense::Pessimistic);
  CHECK(inst.num_leader_vars == 2);
  CHECK(inst.num_follower_vars == 6);
  CHECK(inst.num_follower_rows() == 4);
  const CouplingView view = coupling_view(inst);
  CHECK(view.pure_rows.size() == 3);      // one edge row, two bounds
  CHECK(view.coupling_rows.size() == 2);  // one per vertex
  CHECK(inst.leader_cost_x == Vec{q(-1), q(-1)});
  CHECK(is_zero(inst.leader_cost_y));
  CHECK(is_zero(inst.follower_cost));
  // Coupling row for vertex k = 2 on the split variables.
  const Vec g2 = inst.leader_g.row(4);
  CHECK(g2 == Vec{q(-1), q(-2), q(-4), q(1), q(2), q(4)});
}

TEST_CASE("brute-force MIS on small graphs") {
  CHECK(solve_mis_bruteforce(Graph{2, {{0, 1}}}).size == 1);
  CHECK(solve_mis_bruteforce(path(3)).size == 2);
  CHECK(solve_mis_bruteforce(path(3)).witness ==
        std::vector<std::size_t>{0, 2});
  CHECK(solve_mis_bruteforce(cycle(5)).size == 2);
  CHECK(solve_mis_bruteforce(Graph{3, {}}).size == 3);
  Graph big{21, {}};
  CHECK_THROWS_AS(solve_mis_bruteforce(big), SizeGuardError);
}

TEST_CASE("single-vertex reduction accepts 1 and rejects 1/2") {
  const Graph g{1, {}};
  const BlpInstance inst = reduce_mis(g);
  const PessimisticEvaluation one = pessimistic_evaluate(inst, {q(1)});
  CHECK(one.feasible);
  CHECK(one.value == q(-1));
  const PessimisticEvaluation zero = pessimistic_evaluate(inst, {q(0)});
  CHECK(zero.feasible);
  CHECK(zero.value == 0);
  CHECK_FALSE(pessimistic_evaluate(inst, {q(1, 2)}).feasible);
}

TEST_CASE("single-edge reduction evaluates the three binary candidates") {
  const BlpInstance inst = reduce_mis(Graph{2, {{0, 1}}});
  CHECK(pessimistic_evaluate(inst, {q(0), q(0)}).value == 0);
  CHECK(pessimistic_evaluate(inst, {q(1), q(0)}).value == q(-1));
  CHECK(pessimistic_evaluate(inst, {q(0), q(1)}).value == q(-1));
  CHECK_FALSE(pessimistic_evaluate(inst, {q(1), q(1)}).feasible);
}

TEST_CASE("path on three vertices reaches -2") {
  const BlpInstance inst = reduce_mis(path(3));
  const PessimisticEvaluation best =
      pessimistic_evaluate(inst, {q(1), q(0), q(1)});
  CHECK(best.feasible);
  CHECK(best.value == q(-2));
  const ReductionReport report = verify_reduction(path(3));
  CHECK(report.ok);
  CHECK(report.mis_size == 2);
  CHECK(report.best_binary_value == q(-2));
}

TEST_CASE("triangle optimum is -1") {
  const Graph triangle = cycle(3);
  const ReductionReport report = verify_reduction(triangle);
  CHECK(report.ok);
  CHECK(report.mis_size == 1);
  CHECK(report.best_binary_value == q(-1));
}

TEST_CASE("verification passes on the small-graph suite") {
  for (const Graph& g : {Graph{1, {}}, Graph{2, {{0, 1}}}, path(4), cycle(4)}) {
    const ReductionReport report = verify_reduction(g);
    CHECK(report.ok);
    CHECK(-report.best_binary_value ==
          Rational(Integer(solve_mis_bruteforce(g).size)));
  }
}

TEST_CASE("boxed reductions re-verify and bound the follower") {
  const Graph edge{2, {{0, 1}}};
  const BlpInstance boxed = reduce_mis(edge, /*with_box=*/true);
  CHECK(boxed.num_follower_rows() == 4 + 6);
  const ReductionReport report = verify_reduction_on(edge, boxed);
  CHECK(report.ok);
}

TEST_CASE("moment-system uniqueness holds up to ten vertices") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const GadgetSystem gadget = build_gadget(k, n);
      // The tau system must admit exactly the indicator: solve the square
      // moment system on {k-1, k, k+1} support and check the others via LP
      // in the acceptance suite; here assert the indicator solves it.
      Vec indicator = zeros(n);
      indicator[k - 1] = 1;
      CHECK(matvec(gadget.equality_rows, indicator) == gadget.equality_rhs);
      // Fractional leader points violate the gadget constraint.
      Vec x = zeros(n);
      x[k - 1] = q(1, 2);
      CHECK(gadget_lp_value(gadget, x) > 0);
    }
  }
}

TEST_SUITE_END();
