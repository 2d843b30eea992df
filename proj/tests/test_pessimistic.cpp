#include <doctest.h>

#include "blp/generator.hpp"
#include "blp/oracle.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("pessimistic");

TEST_CASE("epigraph normalization is the identity for d_l = 0") {
  const BlpInstance t2 = fixture_t2();
  const BlpInstance normalized = normalize_epigraph(t2);
  CHECK(normalized.num_leader_vars == t2.num_leader_vars);
  CHECK(normalized.leader_h == t2.leader_h);
}

TEST_CASE("epigraph bounds on the modified second fixture") {
  BlpInstance inst = fixture_t2();
  inst.leader_cost_y = {q(1)};
  const BlpInstance normalized = normalize_epigraph(inst);
  REQUIRE(normalized.num_leader_vars == 2);  // theta appended, no shift
  CHECK(is_zero(normalized.leader_cost_y));
  CHECK(normalized.leader_cost_x == Vec{q(-1), q(1)});
  // theta <= 1: y ranges in [0, 1] over the relaxation.
  const std::size_t theta_row = inst.num_leader_rows();
  CHECK(normalized.leader_a(theta_row, 1) == 1);
  CHECK(normalized.leader_h[theta_row] == 1);
  // Epigraph coupling row d_l.y - theta <= 0 comes last.
  const std::size_t last = normalized.num_leader_rows() - 1;
  CHECK(normalized.leader_g.row(last) == Vec{q(1)});
  CHECK(normalized.leader_a.row(last) == Vec{q(0), q(-1)});
  CHECK(normalized.leader_h[last] == 0);
}

TEST_CASE("epigraph shift variable appears for negative lower bounds") {
  BlpInstance inst = fixture_t2();
  inst.leader_cost_y = {q(-1)};  // d_l.y ranges in [-1, 0]
  const BlpInstance normalized = normalize_epigraph(inst);
  REQUIRE(normalized.num_leader_vars == 3);
  CHECK(normalized.leader_cost_x == Vec{q(-1), q(1), q(-1)});
  const ValidationReport report = validate_a1(normalized);
  CHECK(report.a1_status == A1Status::Satisfied);
}

TEST_CASE("epigraph-normalized solve matches direct evaluation") {
  BlpInstance inst = fixture_t2();
  inst.leader_cost_y = {q(1)};
  const PessimisticResult result = solve_pessimistic(inst);
  REQUIRE(result.status == BilevelStatus::Optimal);
  const PessimisticEvaluation eval = pessimistic_evaluate(inst, result.x);
  CHECK(eval.feasible);
  CHECK(eval.value == result.value);
  const PessimisticResult reference = pessimistic_1d_sweep(inst);
  CHECK(reference.value == result.value);
}

TEST_CASE("basis system of the second fixture") {
  const BlpInstance t2 = fixture_t2();
  const LiftedBasisSystem system = build_basis_system(t2, LiftedMode::WT);
  CHECK_FALSE(system.has_t);  // d_f = 0 drops the value coordinate
  CHECK(system.dim == 1);
  CHECK(system.maps.size() <= 2);
  const LiftedSpace space = make_lifted_space(t2, LiftedMode::WT);
  const auto planes = build_hyperplanes(t2, space, system.maps);
  CHECK(planes.size() <= 2);  // (m_f) rows per basis before dedup
  CHECK(planes.size() == 1);  // both bases share the boundary w = 0
}

TEST_CASE("candidate basis count respects the binomial bound") {
  // n_f = 2, m_f = 1 with a generic equality row: at most C(3, 1) bases.
  BlpInstance inst;
  inst.sense = ProblemSense::Pessimistic;
  inst.num_leader_vars = 1;
  inst.num_follower_vars = 2;
  inst.leader_a = Matrix{{q(1)}, {q(0)}};
  inst.leader_g = Matrix{{q(0), q(0)}, {q(1), q(1)}};
  inst.leader_h = {q(1), q(1)};
  inst.leader_cost_x = {q(-1)};
  inst.leader_cost_y = zeros(2);
  inst.follower_a = Matrix{{q(-1)}};
  inst.follower_g = Matrix{{q(1), q(1)}};
  inst.follower_h = {q(0)};
  inst.follower_cost = {q(1), q(2)};
  check_instance(inst);
  const LiftedBasisSystem system = build_basis_system(inst, LiftedMode::WT);
  CHECK(system.has_t);
  CHECK(system.dim == 2);
  CHECK(system.maps.size() <= 3);
  for (const VertexMap& map : system.maps) {
    CHECK(map.basis.indices[0] == 0);  // equality row always active
  }
  const LiftedSpace space = make_lifted_space(inst, LiftedMode::WT);
  const auto planes = build_hyperplanes(inst, space, system.maps);
  CHECK(planes.size() <= 2 * system.maps.size());
}

TEST_CASE("vertex maps reproduce reaction-set vertices") {
  const BlpInstance t2 = fixture_t2();
  const LiftedBasisSystem system = build_basis_system(t2, LiftedMode::WT);
  // At w = -1/2 (x = 1/2), Y = [0, 1/2]: the two bases give 0 and 1/2.
  const Vec u{q(-1, 2)};
  std::vector<Rational> values;
  for (const VertexMap& map : system.maps) {
    if (basis_feasible_at(map, system.constraints, u)) {
      values.push_back(vertex_at(map, u)[0]);
    }
  }
  REQUIRE(values.size() == 2);
  CHECK(values[0] == 0);
  CHECK(values[1] == q(1, 2));
}

TEST_CASE("second fixture solves to -1/2 at x = 1/2") {
  const PessimisticResult result = solve_pessimistic(fixture_t2());
  REQUIRE(result.status == BilevelStatus::Optimal);
  CHECK(result.value == q(-1, 2));
  CHECK(result.x == Vec{q(1, 2)});
  CHECK(result.verified_pointwise);
  CHECK(result.counts.cells >= 1);
}

TEST_CASE("coupling-free pessimistic instance degenerates to one LP") {
  BlpInstance inst = fixture_t2();
  inst.leader_a = Matrix{{q(1)}};
  inst.leader_g = Matrix{{q(0)}};
  inst.leader_h = {q(1)};
  const PessimisticResult result = solve_pessimistic(inst);
  REQUIRE(result.status == BilevelStatus::Optimal);
  CHECK(result.value == q(-1));
  CHECK(result.x == Vec{q(1)});
  CHECK(result.counts.lp_solves >= 1);
  CHECK(result.counts.cells == 0);
}

TEST_CASE("unique follower responses collapse the two senses") {
  // Y(x) = [0, x] with a strictly positive follower cost: R(x) = {0}.
  BlpInstance pess = fixture_t2();
  pess.follower_cost = {q(1)};
  pess.leader_cost_x = {q(1)};
  pess.leader_h = {q(1), q(1, 2)};
  const PessimisticResult two = solve_pessimistic(pess);

  BlpInstance opti = pess;
  opti.sense = ProblemSense::Optimistic;
  const OptimisticResult one = solve_optimistic(opti);
  REQUIRE(two.status == BilevelStatus::Optimal);
  REQUIRE(one.status == BilevelStatus::Optimal);
  CHECK(two.value == one.value);
}

TEST_CASE("wt and xt modes agree") {
  for (std::uint64_t seed = 300; seed < 315; ++seed) {
    GenSpec spec;
    spec.family = InstanceFamily::RandomPessimistic;
    spec.seed = seed;
    spec.num_leader_vars = 1 + seed % 2;
    spec.num_follower_vars = 1 + seed % 2;
    spec.num_leader_rows = 1;
    spec.num_follower_rows = 1 + (seed / 2) % 2;
    const BlpInstance inst = generate_instance(spec);
    PessimisticOptions wt;
    wt.space = LiftedMode::WT;
    PessimisticOptions xt;
    xt.space = LiftedMode::XT;
    const PessimisticResult a = solve_pessimistic(inst, wt);
    const PessimisticResult b = solve_pessimistic(inst, xt);
    REQUIRE(a.status == b.status);
    if (a.status == BilevelStatus::Optimal) CHECK(a.value == b.value);
  }
}

TEST_CASE("strict faces mode agrees on the second fixture") {
  PessimisticOptions options;
  options.strict_faces = true;
  const PessimisticResult result = solve_pessimistic(fixture_t2(), options);
  REQUIRE(result.status == BilevelStatus::Optimal);
  CHECK(result.value == q(-1, 2));
}

TEST_CASE("solver refuses relaxed instances without force") {
  BlpInstance inst = fixture_t2();
  inst.follower_a = Matrix{{q(0)}};
  inst.follower_g = Matrix{{q(-1)}};
  inst.follower_h = {q(0)};
  CHECK_THROWS_AS(solve_pessimistic(inst), PreconditionError);
}

TEST_CASE("sweep equivalence on random one-dimensional instances") {
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    GenSpec spec;
    spec.family = InstanceFamily::RandomPessimistic;
    spec.seed = seed;
    spec.num_leader_vars = 1;
    spec.num_follower_vars = 1 + seed % 2;
    spec.num_leader_rows = 1;
    spec.num_follower_rows = 1 + (seed / 2) % 2;
    const BlpInstance inst = generate_instance(spec);
    const PessimisticResult solver = solve_pessimistic(inst);
    const PessimisticResult sweep = pessimistic_1d_sweep(inst);
    REQUIRE(solver.status == sweep.status);
    if (solver.status == BilevelStatus::Optimal) {
      CHECK(solver.value == sweep.value);
      CHECK(pessimistic_evaluate(inst, solver.x).feasible);
      CHECK(pessimistic_evaluate(inst, sweep.x).feasible);
    }
  }
}

TEST_CASE("cell basis sets match the sign-vector determination") {
  // The feasible-basis set of a cell can be read off the cell's sign vector:
  // each non-active row of a vertex map bounds its feasibility region by one
  // arrangement hyperplane. Cross-check that reading against the direct
  // evaluation at interior points used by the solver.
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    GenSpec spec;
    spec.family = InstanceFamily::RandomPessimistic;
    spec.seed = seed;
    spec.num_leader_vars = 1;
    spec.num_follower_vars = 2;
    spec.num_leader_rows = 1;
    spec.num_follower_rows = 2;
    const BlpInstance inst = generate_instance(spec);
    const LiftedSpace space = make_lifted_space(inst, LiftedMode::WT);
    const LiftedBasisSystem system = build_basis_system(inst, LiftedMode::WT);
    const auto planes = build_hyperplanes(inst, space, system.maps);
    const Arrangement arr =
        enumerate_cells(planes, space.dim, space.bounding_box);

    auto find_plane = [&](const Hyperplane& h) {
      for (std::size_t i = 0; i < arr.hyperplanes.size(); ++i) {
        if (arr.hyperplanes[i] == h) return i;
      }
      return arr.hyperplanes.size();
    };

    for (const ArrangementCell& cell : arr.cells) {
      for (const VertexMap& map : system.maps) {
        bool by_signs = true;
        for (std::size_t r = 0;
             r < system.constraints.size() && by_signs; ++r) {
          if (std::find(map.basis.indices.begin(), map.basis.indices.end(),
                        r) != map.basis.indices.end()) {
            continue;
          }
          const AffineForm violation =
              basis_row_violation(map, system.constraints[r], space.dim);
          if (is_zero(violation.coeff)) {
            by_signs = violation.constant <= 0;
            continue;
          }
          // violation(u) <= 0 on the side of the boundary hyperplane whose
          // orientation depends on the leading coefficient's sign.
          Rational lead;
          for (const Rational& c : violation.coeff) {
            if (c != 0) {
              lead = c;
              break;
            }
          }
          const std::size_t index = find_plane(
              make_hyperplane(violation.coeff, -violation.constant));
          REQUIRE(index < arr.hyperplanes.size());
          by_signs = lead > 0 ? cell.signs[index] < 0 : cell.signs[index] > 0;
        }
        CHECK(by_signs == basis_feasible_at(map, system.constraints,
                                            cell.interior_point));
      }
    }
  }
}

TEST_CASE("bounding box contains the lifted image of the leader set") {
  blp::testing::RandomRationals source(606);
  for (std::uint64_t seed : {11ull, 22ull}) {
    GenSpec spec;
    spec.family = InstanceFamily::RandomPessimistic;
    spec.seed = seed;
    spec.num_leader_vars = 1 + seed % 2;
    spec.num_follower_vars = 1;
    spec.num_leader_rows = 1;
    spec.num_follower_rows = 2;
    const BlpInstance inst = generate_instance(spec);
    for (const LiftedMode mode : {LiftedMode::WT, LiftedMode::XT}) {
      const LiftedSpace space = make_lifted_space(inst, mode);
      const std::vector<Vec> vertices =
          enumerate_vertices(leader_pure_set(inst));
      REQUIRE(!vertices.empty());
      for (int round = 0; round < 15; ++round) {
        // Random convex combination of leader vertices.
        Vec weights(vertices.size());
        Rational total = 0;
        for (auto& w : weights) {
          w = source.nonneg(5) + q(1, 7);
          total += w;
        }
        Vec x = zeros(inst.num_leader_vars);
        for (std::size_t v = 0; v < vertices.size(); ++v) {
          x = add(x, scale(vertices[v], weights[v] / total));
        }
        const PhiResult phi = eval_phi_direct(inst, x);
        REQUIRE(phi.status == EvalStatus::Ok);
        Vec lifted = mode == LiftedMode::WT ? matvec(inst.follower_a, x) : x;
        if (space.has_t) lifted.push_back(phi.value);
        CHECK(contains(space.bounding_box, lifted));
      }
    }
  }
}

TEST_CASE("sandwich: solver value lower-bounds verified candidates") {
  const BlpInstance t2 = fixture_t2();
  const PessimisticResult result = solve_pessimistic(t2);
  REQUIRE(result.status == BilevelStatus::Optimal);
  for (const Vec& candidate : pessimistic_candidates(t2, {result.x})) {
    const PessimisticEvaluation eval = pessimistic_evaluate(t2, candidate);
    if (eval.feasible) CHECK(result.value <= eval.value);
  }
}

TEST_SUITE_END();
