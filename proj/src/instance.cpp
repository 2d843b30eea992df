#include "blp/instance.hpp"

namespace blp {

void check_instance(const BlpInstance& inst) {
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  const std::size_t ml = inst.leader_h.size();
  const std::size_t mf = inst.follower_h.size();
  auto expect = [](bool ok, const char* what) {
    if (!ok) throw DimensionError(std::string("instance: ") + what);
  };
  expect(inst.leader_a.rows() == ml && (ml == 0 || inst.leader_a.cols() == nl),
         "leader.A shape");
  expect(inst.leader_g.rows() == ml && (ml == 0 || inst.leader_g.cols() == nf),
         "leader.G shape");
  expect(inst.leader_cost_x.size() == nl, "leader.cost_x length");
  expect(inst.leader_cost_y.size() == nf, "leader.cost_y length");
  expect(inst.follower_a.rows() == mf &&
             (mf == 0 || inst.follower_a.cols() == nl),
         "follower.A shape");
  expect(inst.follower_g.rows() == mf &&
             (mf == 0 || inst.follower_g.cols() == nf),
         "follower.G shape");
  expect(inst.follower_cost.size() == nf, "follower.cost length");
}

CouplingView coupling_view(const BlpInstance& inst) {
  CouplingView view;
  for (std::size_t i = 0; i < inst.num_leader_rows(); ++i) {
    bool pure = true;
    for (std::size_t j = 0; j < inst.num_follower_vars && pure; ++j) {
      pure = inst.leader_g(i, j) == 0;
    }
    (pure ? view.pure_rows : view.coupling_rows).push_back(i);
  }
  return view;
}

HPolyhedron leader_pure_set(const BlpInstance& inst) {
  const CouplingView view = coupling_view(inst);
  Matrix a(0, inst.num_leader_vars);
  Vec b;
  for (std::size_t row : view.pure_rows) {
    a.append_row(inst.leader_a.row(row));
    b.push_back(inst.leader_h[row]);
  }
  return HPolyhedron{std::move(a), std::move(b),
                     std::vector<bool>(inst.num_leader_vars, true)};
}

HPolyhedron follower_set(const BlpInstance& inst, const Vec& x) {
  if (x.size() != inst.num_leader_vars) {
    throw DimensionError("follower_set: leader point dimension");
  }
  Vec shift = matvec(inst.follower_a, x);
  return HPolyhedron{inst.follower_g, subtract(inst.follower_h, shift),
                     std::vector<bool>(inst.num_follower_vars, true)};
}

HPolyhedron high_point_relaxation(const BlpInstance& inst) {
  const CouplingView view = coupling_view(inst);
  const std::size_t nl = inst.num_leader_vars;
  const std::size_t nf = inst.num_follower_vars;
  Matrix a(0, nl + nf);
  Vec b;
  for (std::size_t row : view.pure_rows) {
    Vec joint(nl + nf);
    for (std::size_t j = 0; j < nl; ++j) joint[j] = inst.leader_a(row, j);
    a.append_row(joint);
    b.push_back(inst.leader_h[row]);
  }
  for (std::size_t row = 0; row < inst.num_follower_rows(); ++row) {
    Vec joint(nl + nf);
    for (std::size_t j = 0; j < nl; ++j) joint[j] = inst.follower_a(row, j);
    for (std::size_t j = 0; j < nf; ++j) joint[nl + j] = inst.follower_g(row, j);
    a.append_row(joint);
    b.push_back(inst.follower_h[row]);
  }
  return HPolyhedron{std::move(a), std::move(b),
                     std::vector<bool>(nl + nf, true)};
}

ValidationReport validate_a1(const BlpInstance& inst) {
  ValidationReport report;
  const HPolyhedron leader = leader_pure_set(inst);

  report.leader_set_nonempty = !is_empty(leader);
  if (!report.leader_set_nonempty) {
    report.notes.push_back("leader set is empty");
  }

  report.leader_set_bounded = true;
  for (std::size_t j = 0; j < inst.num_leader_vars && report.leader_set_nonempty;
       ++j) {
    Vec obj = zeros(inst.num_leader_vars);
    obj[j] = 1;
    if (optimize(leader, obj, Sense::Maximize).status == LpStatus::Unbounded) {
      report.leader_set_bounded = false;
      report.notes.push_back("leader variable " + std::to_string(j) +
                             " is unbounded above");
      break;
    }
  }

  // Recession cone {y >= 0 : G_f y <= 0}; trivial iff sum of coordinates is
  // bounded (at zero) over it. Independent of x.
  {
    HPolyhedron cone{inst.follower_g, zeros(inst.num_follower_rows()),
                     std::vector<bool>(inst.num_follower_vars, true)};
    Vec ones(inst.num_follower_vars, Rational(1));
    report.follower_recession_trivial =
        optimize(cone, ones, Sense::Maximize).status != LpStatus::Unbounded;
    if (!report.follower_recession_trivial) {
      report.notes.push_back("follower feasible set has a recession ray");
    }
  }

  // Nonemptiness of Y(x) on the leader set: {x : Y(x) nonempty} is a
  // projection of a polyhedron, hence convex, so checking the vertices of a
  // bounded leader set suffices.
  report.follower_nonempty_on_leader_vertices = true;
  if (report.leader_set_nonempty) {
    for (const Vec& vertex : enumerate_vertices(leader)) {
      if (is_empty(follower_set(inst, vertex))) {
        report.follower_nonempty_on_leader_vertices = false;
        report.notes.push_back("follower set empty at a leader vertex");
        break;
      }
    }
  } else {
    report.follower_nonempty_on_leader_vertices = false;
  }

  if (report.leader_set_nonempty && report.leader_set_bounded &&
      report.follower_recession_trivial &&
      report.follower_nonempty_on_leader_vertices) {
    report.a1_status = A1Status::Satisfied;
  } else if (report.leader_set_nonempty &&
             report.follower_nonempty_on_leader_vertices) {
    report.a1_status = A1Status::Relaxed;
  } else {
    report.a1_status = A1Status::Violated;
  }
  return report;
}

std::string to_string(A1Status status) {
  switch (status) {
    case A1Status::Satisfied: return "satisfied";
    case A1Status::Relaxed: return "relaxed";
    case A1Status::Violated: return "violated";
  }
  return "unknown";
}

std::string to_string(ProblemSense sense) {
  return sense == ProblemSense::Optimistic ? "optimistic" : "pessimistic";
}

BlpInstance fixture_t1() {
  BlpInstance inst;
  inst.name = "t1";
  inst.sense = ProblemSense::Optimistic;
  inst.num_leader_vars = 1;
  inst.num_follower_vars = 1;
  inst.leader_a = Matrix{{Rational(1)}};
  inst.leader_g = Matrix{{Rational(0)}};
  inst.leader_h = {Rational(1)};
  inst.leader_cost_x = {Rational(1)};
  inst.leader_cost_y = {Rational(1)};
  inst.follower_a = Matrix{{Rational(-1)}};
  inst.follower_g = Matrix{{Rational(1)}};
  inst.follower_h = {Rational(0)};
  inst.follower_cost = {Rational(-1)};
  check_instance(inst);
  return inst;
}

BlpInstance fixture_t2() {
  BlpInstance inst;
  inst.name = "t2";
  inst.sense = ProblemSense::Pessimistic;
  inst.num_leader_vars = 1;
  inst.num_follower_vars = 1;
  inst.leader_a = Matrix{{Rational(1)}, {Rational(0)}};
  inst.leader_g = Matrix{{Rational(0)}, {Rational(1)}};
  inst.leader_h = {Rational(1), Rational(1, 2)};
  inst.leader_cost_x = {Rational(-1)};
  inst.leader_cost_y = {Rational(0)};
  inst.follower_a = Matrix{{Rational(-1)}};
  inst.follower_g = Matrix{{Rational(1)}};
  inst.follower_h = {Rational(0)};
  inst.follower_cost = {Rational(0)};
  check_instance(inst);
  return inst;
}

}  // namespace blp
