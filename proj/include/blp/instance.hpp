#pragma once

#include <string>
#include <vector>

#include "blp/polyhedron.hpp"

namespace blp {

enum class ProblemSense { Optimistic, Pessimistic };

/// A bilevel linear program:
///   leader   min c_l.x + d_l.y*   over x >= 0 with A_l x + G_l y* <= h_l
///   follower y* optimal for        min d_f.y  over y >= 0 with A_f x + G_f y <= h_f
/// Optimistic/pessimistic sense resolves follower ties.
struct BlpInstance {
  std::string name;
  ProblemSense sense = ProblemSense::Optimistic;
  std::size_t num_leader_vars = 0;    // n_l
  std::size_t num_follower_vars = 0;  // n_f
  Matrix leader_a;                    // m_l x n_l
  Matrix leader_g;                    // m_l x n_f
  Vec leader_h;
  Vec leader_cost_x;  // c_l
  Vec leader_cost_y;  // d_l
  Matrix follower_a;  // m_f x n_l
  Matrix follower_g;  // m_f x n_f
  Vec follower_h;
  Vec follower_cost;  // d_f

  std::size_t num_leader_rows() const { return leader_h.size(); }
  std::size_t num_follower_rows() const { return follower_h.size(); }
};

/// Throws DimensionError when any block is inconsistent with n_l/n_f.
void check_instance(const BlpInstance& inst);

/// Partition of leader rows by the zero pattern of leader_g: pure rows
/// define the x-only set, the rest couple the follower response.
struct CouplingView {
  std::vector<std::size_t> pure_rows;
  std::vector<std::size_t> coupling_rows;  // J
};

CouplingView coupling_view(const BlpInstance& inst);

/// The x-only leader set {x >= 0 : pure rows hold}.
HPolyhedron leader_pure_set(const BlpInstance& inst);

/// Follower feasible set Y(x) for fixed x.
HPolyhedron follower_set(const BlpInstance& inst, const Vec& x);

/// Joint relaxation {(x, y) >= 0 : pure leader rows, follower rows}.
HPolyhedron high_point_relaxation(const BlpInstance& inst);

enum class A1Status { Satisfied, Relaxed, Violated };

struct ValidationReport {
  bool leader_set_nonempty = false;
  bool leader_set_bounded = false;
  bool follower_recession_trivial = false;
  bool follower_nonempty_on_leader_vertices = false;
  A1Status a1_status = A1Status::Violated;
  std::vector<std::string> notes;
};

/// Checks nonemptiness/boundedness of both levels. Boundedness failures
/// yield Relaxed (the instance is still accepted; pointwise evaluation stays
/// sound); emptiness failures yield Violated.
ValidationReport validate_a1(const BlpInstance& inst);

std::string to_string(A1Status status);
std::string to_string(ProblemSense sense);

/// Canonical toy fixtures used across the test and documentation surface.
BlpInstance fixture_t1();
BlpInstance fixture_t2();

}  // namespace blp
