#include <doctest.h>

#include "blp/driver.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("driver");

TEST_CASE("auto dispatch prefers the special-case collapses") {
  BlpInstance minmin = fixture_t1();
  minmin.leader_cost_y = minmin.follower_cost;
  const SolutionRecord a = solve_instance(minmin);
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->method == "minmin");

  BlpInstance minmax = fixture_t1();
  minmax.leader_cost_y = scale(minmax.follower_cost, q(-1));
  const SolutionRecord b = solve_instance(minmax);
  CHECK(b.certificate->method == "minmax");

  // The first fixture is itself min-max (d_l = -d_f); perturb the leader's
  // follower cost to reach the general dispatch.
  const SolutionRecord t1 = solve_instance(fixture_t1());
  CHECK(t1.certificate->method == "minmax");
  BlpInstance general = fixture_t1();
  general.leader_cost_y = {q(2)};
  const SolutionRecord c = solve_instance(general);
  CHECK(c.certificate->method == "thm1");
  const SolutionRecord d = solve_instance(fixture_t2());
  CHECK(d.certificate->method == "thm2");
}

TEST_CASE("pessimistic min-min requests carry the sense note") {
  BlpInstance inst = fixture_t2();
  inst.leader_a = Matrix{{q(1)}};
  inst.leader_g = Matrix{{q(0)}};
  inst.leader_h = {q(1)};
  inst.leader_cost_y = inst.follower_cost;  // both zero: min-min collapse
  const SolutionRecord record = solve_instance(inst);
  REQUIRE(record.certificate.has_value());
  CHECK(record.certificate->method == "minmin");
  REQUIRE(record.certificate->note.has_value());
  CHECK(record.certificate->note->find("pessimistic") != std::string::npos);
}

TEST_CASE("thm2 records carry cell and basis certificates") {
  DriverOptions options;
  options.method = SolveMethod::Thm2;
  const SolutionRecord record = solve_instance(fixture_t2(), options);
  CHECK(record.status == "optimal");
  REQUIRE(record.value.has_value());
  CHECK(*record.value == q(-1, 2));
  REQUIRE(record.certificate.has_value());
  CHECK(record.certificate->cell_sign_vector.has_value());
  CHECK(record.stats.cells >= 1);
  CHECK(record.stats.lp_solves >= 1);
}

TEST_CASE("check_solution accepts emitted records and rejects tampering") {
  for (const BlpInstance& inst : {fixture_t1(), fixture_t2()}) {
    SolutionRecord record = solve_instance(inst);
    CHECK(check_solution(inst, record).valid);
    REQUIRE(record.value.has_value());
    *record.value += 1;
    CHECK_FALSE(check_solution(inst, record).valid);
  }
  SolutionRecord moved = solve_instance(fixture_t2());
  moved.x = {q(3, 4)};  // pessimistically infeasible point
  CHECK_FALSE(check_solution(fixture_t2(), moved).valid);
}

TEST_CASE("solution serialization round trips") {
  const SolutionRecord record = solve_instance(fixture_t2());
  const SolutionRecord back = parse_solution(serialize_solution(record));
  CHECK(back.status == record.status);
  CHECK(back.value == record.value);
  CHECK(back.x == record.x);
  CHECK(back.stats.lp_solves == record.stats.lp_solves);
  REQUIRE(back.certificate.has_value());
  CHECK(back.certificate->method == "thm2");
  CHECK(back.certificate->cell_sign_vector ==
        record.certificate->cell_sign_vector);
}

TEST_SUITE_END();
