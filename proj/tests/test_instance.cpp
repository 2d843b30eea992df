#include <doctest.h>

#include "blp/instance_io.hpp"
#include "blp/reduction.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("instance");

namespace {

bool structurally_equal(const BlpInstance& a, const BlpInstance& b) {
  return a.name == b.name && a.sense == b.sense &&
         a.num_leader_vars == b.num_leader_vars &&
         a.num_follower_vars == b.num_follower_vars &&
         a.leader_a == b.leader_a && a.leader_g == b.leader_g &&
         a.leader_h == b.leader_h && a.leader_cost_x == b.leader_cost_x &&
         a.leader_cost_y == b.leader_cost_y && a.follower_a == b.follower_a &&
         a.follower_g == b.follower_g && a.follower_h == b.follower_h &&
         a.follower_cost == b.follower_cost;
}

}  // namespace

TEST_CASE("serialize/parse round trip on the fixtures") {
  for (const BlpInstance& inst : {fixture_t1(), fixture_t2()}) {
    const BlpInstance back = parse_instance(serialize_instance(inst));
    CHECK(structurally_equal(inst, back));
  }
}

TEST_CASE("shipped fixture files match the builders") {
  const std::string dir = BLP_DATA_DIR;
  CHECK(structurally_equal(parse_instance(read_file(dir + "/t1.json")),
                           fixture_t1()));
  CHECK(structurally_equal(parse_instance(read_file(dir + "/t2.json")),
                           fixture_t2()));
}

TEST_CASE("rational tokens are canonicalized on parse") {
  const std::string text = R"({
    "sense": "optimistic",
    "num_leader_vars": 1,
    "num_follower_vars": 1,
    "leader": {"A": [[1]], "G": [[0]], "h": ["2/4"], "cost_x": [1], "cost_y": [1]},
    "follower": {"A": [[-1]], "G": [[1]], "h": ["-6/4"], "cost": [-1]}
  })";
  const BlpInstance parsed = parse_instance(text);
  CHECK(parsed.leader_h[0] == q(1, 2));
  CHECK(parsed.follower_h[0] == q(-3, 2));
  CHECK(to_string(parsed.leader_h[0]) == "1/2");
}

TEST_CASE("wrong row arity names the row") {
  const std::string text = R"({
    "sense": "optimistic",
    "num_leader_vars": 2,
    "num_follower_vars": 1,
    "leader": {"A": [[1, 0], [1]], "G": [[0], [0]], "h": [1, 1],
               "cost_x": [1, 1], "cost_y": [1]},
    "follower": {"A": [[0, 0]], "G": [[1]], "h": [1], "cost": [1]}
  })";
  CHECK_THROWS_WITH_AS(parse_instance(text),
                       doctest::Contains("leader.A row 1"), FormatError);
}

TEST_CASE("non-integer JSON numbers are rejected") {
  const std::string text = R"({
    "sense": "optimistic",
    "num_leader_vars": 1,
    "num_follower_vars": 1,
    "leader": {"A": [[0.5]], "G": [[0]], "h": [1], "cost_x": [1], "cost_y": [1]},
    "follower": {"A": [[0]], "G": [[1]], "h": [1], "cost": [1]}
  })";
  CHECK_THROWS_AS(parse_instance(text), FormatError);
}

TEST_CASE("instances without leader rows are legal") {
  const std::string text = R"({
    "sense": "optimistic",
    "num_leader_vars": 1,
    "num_follower_vars": 1,
    "leader": {"A": [], "G": [], "h": [], "cost_x": [1], "cost_y": [0]},
    "follower": {"A": [[-1]], "G": [[1]], "h": [0], "cost": [-1]}
  })";
  const BlpInstance inst = parse_instance(text);
  CHECK(inst.num_leader_rows() == 0);
  CHECK(coupling_view(inst).coupling_rows.empty());
  // The leader set {x >= 0} is unbounded: boundedness is relaxed.
  const ValidationReport report = validate_a1(inst);
  CHECK(report.leader_set_nonempty);
  CHECK_FALSE(report.leader_set_bounded);
  CHECK(report.a1_status == A1Status::Relaxed);
}

TEST_CASE("coupling view partitions leader rows by the zero pattern") {
  CHECK(coupling_view(fixture_t1()).coupling_rows.empty());

  const CouplingView t2 = coupling_view(fixture_t2());
  CHECK(t2.pure_rows == std::vector<std::size_t>{0});
  CHECK(t2.coupling_rows == std::vector<std::size_t>{1});

  const Graph edge{2, {{0, 1}}};
  const BlpInstance mis = reduce_mis(edge);
  const CouplingView view = coupling_view(mis);
  CHECK(view.coupling_rows.size() == 2);
  CHECK(view.pure_rows.size() == 3);
}

TEST_CASE("validate_a1 on the fixtures") {
  const ValidationReport t1 = validate_a1(fixture_t1());
  CHECK(t1.a1_status == A1Status::Satisfied);
  CHECK(t1.leader_set_nonempty);
  CHECK(t1.leader_set_bounded);
  CHECK(t1.follower_recession_trivial);
  CHECK(t1.follower_nonempty_on_leader_vertices);

  CHECK(validate_a1(fixture_t2()).a1_status == A1Status::Satisfied);
}

TEST_CASE("unbounded follower set relaxes A1") {
  BlpInstance inst = fixture_t1();
  // Single row -y <= 0: recession ray along y.
  inst.follower_a = Matrix{{q(0)}};
  inst.follower_g = Matrix{{q(-1)}};
  inst.follower_h = {q(0)};
  inst.follower_cost = {q(1)};
  const ValidationReport report = validate_a1(inst);
  CHECK_FALSE(report.follower_recession_trivial);
  CHECK(report.a1_status == A1Status::Relaxed);
}

TEST_CASE("MIS reductions are relaxed by construction") {
  const Graph edge{2, {{0, 1}}};
  const ValidationReport report = validate_a1(reduce_mis(edge));
  CHECK(report.a1_status == A1Status::Relaxed);
  CHECK_FALSE(report.follower_recession_trivial);
  CHECK(report.leader_set_nonempty);
}

TEST_CASE("empty leader set is a violation") {
  BlpInstance inst = fixture_t1();
  inst.leader_a = Matrix{{q(1)}, {q(-1)}};
  inst.leader_g = Matrix{{q(0)}, {q(0)}};
  inst.leader_h = {q(1), q(-2)};  // x <= 1 and x >= 2
  const ValidationReport report = validate_a1(inst);
  CHECK_FALSE(report.leader_set_nonempty);
  CHECK(report.a1_status == A1Status::Violated);
}

TEST_CASE("coupling view ignores row order") {
  BlpInstance inst = fixture_t2();
  // Swap the two leader rows; the coupling row must follow its content.
  std::swap(inst.leader_h[0], inst.leader_h[1]);
  Matrix a{{q(0)}, {q(1)}};
  Matrix g{{q(1)}, {q(0)}};
  inst.leader_a = a;
  inst.leader_g = g;
  const CouplingView view = coupling_view(inst);
  CHECK(view.coupling_rows == std::vector<std::size_t>{0});
  CHECK(view.pure_rows == std::vector<std::size_t>{1});
}

TEST_CASE("graph files round trip and validate") {
  const Graph g{5, {{0, 1}, {1, 2}, {3, 4}}};
  const Graph back = parse_graph(serialize_graph(g));
  CHECK(back.num_vertices == 5);
  CHECK(back.edges == g.edges);
  CHECK_THROWS_AS(parse_graph(R"({"num_vertices": 2, "edges": [[1, 0]]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_graph(R"({"num_vertices": 2, "edges": [[0, 2]]})"),
                  FormatError);
}

TEST_SUITE_END();
