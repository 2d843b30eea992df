#include <doctest.h>

#include "blp/value_function.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("value_function");

TEST_CASE("direct evaluation on the toy fixtures") {
  const BlpInstance t1 = fixture_t1();
  const PhiResult at_half = eval_phi_direct(t1, {q(1, 2)});
  REQUIRE(at_half.status == EvalStatus::Ok);
  CHECK(at_half.value == q(-1, 2));

  const BlpInstance t2 = fixture_t2();
  for (const Rational& x : {q(0), q(1, 3), q(1)}) {
    const PhiResult r = eval_phi_direct(t2, {x});
    REQUIRE(r.status == EvalStatus::Ok);
    CHECK(r.value == 0);
  }

  CHECK_THROWS_AS(eval_phi_direct(t1, {q(-1)}), PreconditionError);
}

TEST_CASE("pwl of the first fixture is a single piece") {
  const PwlConvexFunction pwl = build_pwl(fixture_t1());
  REQUIRE(pwl.pieces.size() == 1);
  CHECK(pwl.pieces[0].slope == Vec{q(-1)});
  CHECK(pwl.pieces[0].offset == 0);
  CHECK(pwl.pieces[0].lambda == Vec{q(1)});
  CHECK(pwl_eval(pwl, {q(1, 3)}) == q(-1, 3));
}

TEST_CASE("two-sided follower gives the absolute value") {
  const BlpInstance inst = blp::testing::fixture_abs();
  const PwlConvexFunction pwl = build_pwl(inst);
  // Three dual extreme points (the origin joins the two slopes); the max is
  // still |x|.
  REQUIRE(pwl.pieces.size() == 3);
  CHECK(pwl_eval(pwl, {q(-1)}) == q(1));
  CHECK(pwl_eval(pwl, {q(0)}) == q(0));
  CHECK(pwl_eval(pwl, {q(2)}) == q(2));

  // Direct follower LP agrees on the instance's domain, and a hand-built LP
  // covers the negative probe outside it.
  for (const Rational& x : {q(0), q(2)}) {
    const PhiResult direct = eval_phi_direct(inst, {x});
    REQUIRE(direct.status == EvalStatus::Ok);
    CHECK(direct.value == pwl_eval(pwl, {x}));
  }
  {
    LpProblem lp;
    lp.sense = Sense::Minimize;
    lp.objective = {q(1)};
    lp.constraints = Matrix{{q(-1)}, {q(-1)}};
    lp.rhs = {q(1), q(-1)};  // h_f - A_f x at x = -1
    lp.relations = {Relation::LessEq, Relation::LessEq};
    lp.domains = {VarDomain::NonNegative};
    const LpOutcome out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == pwl_eval(pwl, {q(-1)}));
  }
}

TEST_CASE("zero follower objective gives the zero function") {
  const PwlConvexFunction pwl = build_pwl(blp::testing::fixture_zero_phi());
  REQUIRE(pwl.pieces.size() == 1);
  CHECK(is_zero(pwl.pieces[0].slope));
  CHECK(pwl.pieces[0].offset == 0);
}

TEST_CASE("empty dual polytope is an A1 violation") {
  BlpInstance inst = fixture_t1();
  // Follower min -y over y >= 0 with no binding rows: dual empty.
  inst.follower_a = Matrix{{q(0)}};
  inst.follower_g = Matrix{{q(0)}};
  inst.follower_h = {q(1)};
  CHECK_THROWS_AS(build_pwl(inst), A1ViolationError);
}

TEST_CASE("piece count respects the binomial bound") {
  blp::testing::RandomRationals source(555);
  auto binomial = [](std::size_t n, std::size_t k) {
    Integer out = 1;
    for (std::size_t i = 0; i < k; ++i) {
      out = out * Integer(n - i) / Integer(i + 1);
    }
    return out;
  };
  for (int round = 0; round < 15; ++round) {
    const std::size_t nf = 1 + source.rng() % 3;
    const std::size_t mf = 1 + source.rng() % 3;
    BlpInstance inst;
    inst.sense = ProblemSense::Optimistic;
    inst.num_leader_vars = 1;
    inst.num_follower_vars = nf;
    inst.leader_a = Matrix{{q(1)}};
    inst.leader_g = Matrix(1, nf);
    inst.leader_h = {q(1)};
    inst.leader_cost_x = {q(1)};
    inst.leader_cost_y = zeros(nf);
    inst.follower_a = Matrix(mf, 1);
    inst.follower_g = Matrix(mf, nf);
    for (std::size_t i = 0; i < mf; ++i) {
      inst.follower_a(i, 0) = source.value();
      for (std::size_t j = 0; j < nf; ++j) inst.follower_g(i, j) = source.value();
    }
    inst.follower_h = Vec(mf);
    for (auto& v : inst.follower_h) v = source.nonneg();
    inst.follower_cost = Vec(nf);
    for (auto& v : inst.follower_cost) v = source.value();
    check_instance(inst);
    try {
      const PwlConvexFunction pwl = build_pwl(inst);
      CHECK(Integer(pwl.pieces.size()) <= binomial(nf + mf, mf));
    } catch (const A1ViolationError&) {
      // empty dual: nothing to bound
    }
  }
}

TEST_CASE("reaction maxima on the fixtures") {
  const BlpInstance t2 = fixture_t2();
  const ReactionMax full = reaction_max(t2, {q(3, 4)}, {q(1)});
  REQUIRE(full.status == EvalStatus::Ok);
  CHECK(full.value == q(3, 4));

  const BlpInstance t1 = fixture_t1();
  const ReactionMax unique = reaction_max(t1, {q(1, 2)}, {q(1)});
  REQUIRE(unique.status == EvalStatus::Ok);
  CHECK(unique.value == q(1, 2));

  const ReactionMax zero = reaction_max(t1, {q(1, 2)}, {q(0)});
  REQUIRE(zero.status == EvalStatus::Ok);
  CHECK(zero.value == 0);
}

TEST_CASE("equality and inequality reaction encodings agree") {
  blp::testing::RandomRationals source(808);
  const BlpInstance fixtures[] = {fixture_t1(), fixture_t2(),
                                  blp::testing::fixture_abs()};
  for (const BlpInstance& inst : fixtures) {
    for (int round = 0; round < 10; ++round) {
      const Vec x{source.nonneg(1)};
      Vec objective(inst.num_follower_vars);
      for (auto& v : objective) v = source.value();
      const ReactionMax le = reaction_max(inst, x, objective, false);
      const ReactionMax eq = reaction_max(inst, x, objective, true);
      REQUIRE(le.status == eq.status);
      if (le.status == EvalStatus::Ok) CHECK(le.value == eq.value);
    }
  }
}

TEST_CASE("pwl max equals direct LP at random points") {
  blp::testing::RandomRationals source(909);
  const BlpInstance fixtures[] = {fixture_t1(), fixture_t2(),
                                  blp::testing::fixture_abs(),
                                  blp::testing::fixture_zero_phi()};
  for (const BlpInstance& inst : fixtures) {
    const PwlConvexFunction pwl = build_pwl(inst);
    int checked = 0;
    while (checked < 100) {
      Vec x(inst.num_leader_vars);
      for (auto& v : x) v = source.nonneg(2);
      const PhiResult direct = eval_phi_direct(inst, x);
      if (direct.status != EvalStatus::Ok) continue;
      CHECK(pwl_eval(pwl, x) == direct.value);
      ++checked;
    }
  }
}

TEST_CASE("convexity spot check") {
  blp::testing::RandomRationals source(1001);
  const BlpInstance inst = blp::testing::fixture_abs();
  const PwlConvexFunction pwl = build_pwl(inst);
  for (int round = 0; round < 50; ++round) {
    const Vec x1{source.nonneg(2)};
    const Vec x2{source.nonneg(2)};
    const Rational mu = source.open_unit();
    const Vec mid = add(scale(x1, mu), scale(x2, Rational(1) - mu));
    CHECK(pwl_eval(pwl, mid) <=
          mu * pwl_eval(pwl, x1) + (Rational(1) - mu) * pwl_eval(pwl, x2));
  }
}

TEST_SUITE_END();
