#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blp/driver.hpp"
#include "blp/reduction.hpp"

namespace py = pybind11;

namespace {

using blp::BlpInstance;
using blp::Rational;
using blp::Vec;

Vec to_vec(const std::vector<std::string>& entries) {
  Vec out;
  out.reserve(entries.size());
  for (const std::string& token : entries) {
    out.push_back(blp::parse_rational(token));
  }
  return out;
}

std::vector<std::string> from_vec(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& entry : v) out.push_back(blp::to_string(entry));
  return out;
}

py::dict record_to_dict(const blp::SolutionRecord& record) {
  py::dict out;
  out["status"] = record.status;
  if (record.value) out["value"] = blp::to_string(*record.value);
  out["x"] = from_vec(record.x);
  if (record.y_witness) out["y_witness"] = from_vec(*record.y_witness);
  if (record.certificate) {
    py::dict cert;
    cert["method"] = record.certificate->method;
    if (record.certificate->piece_index) {
      cert["piece_index"] = *record.certificate->piece_index;
    }
    if (record.certificate->cell_sign_vector) {
      cert["cell_sign_vector"] = *record.certificate->cell_sign_vector;
    }
    if (!record.certificate->bases.empty()) {
      cert["bases"] = record.certificate->bases;
    }
    if (record.certificate->note) cert["note"] = *record.certificate->note;
    out["certificate"] = cert;
  }
  py::dict stats;
  stats["lp_solves"] = record.stats.lp_solves;
  stats["cells"] = record.stats.cells;
  stats["pieces"] = record.stats.pieces;
  out["stats"] = stats;
  return out;
}

blp::DriverOptions make_options(const std::string& method,
                                const std::string& space, bool strict_faces,
                                bool force) {
  blp::DriverOptions options;
  if (method == "auto") options.method = blp::SolveMethod::Auto;
  else if (method == "thm1") options.method = blp::SolveMethod::Thm1;
  else if (method == "thm2") options.method = blp::SolveMethod::Thm2;
  else if (method == "minmax") options.method = blp::SolveMethod::MinMax;
  else if (method == "minmin") options.method = blp::SolveMethod::MinMin;
  else if (method == "oracle") options.method = blp::SolveMethod::Oracle;
  else throw std::invalid_argument("unknown method: " + method);
  if (space == "wt") options.space = blp::LiftedMode::WT;
  else if (space == "xt") options.space = blp::LiftedMode::XT;
  else if (space != "auto") throw std::invalid_argument("unknown space: " + space);
  options.strict_faces = strict_faces;
  options.force = force;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact bilevel linear programming toolkit";

  py::class_<BlpInstance>(m, "Instance")
      .def_property_readonly("name", [](const BlpInstance& i) { return i.name; })
      .def_property_readonly(
          "sense", [](const BlpInstance& i) { return blp::to_string(i.sense); })
      .def_property_readonly(
          "num_leader_vars",
          [](const BlpInstance& i) { return i.num_leader_vars; })
      .def_property_readonly(
          "num_follower_vars",
          [](const BlpInstance& i) { return i.num_follower_vars; })
      .def("to_json", &blp::serialize_instance)
      .def("__repr__", [](const BlpInstance& i) {
        return "<blp.Instance '" + i.name + "' " + blp::to_string(i.sense) +
               " n_l=" + std::to_string(i.num_leader_vars) +
               " n_f=" + std::to_string(i.num_follower_vars) + ">";
      });

  m.def("parse_instance", &blp::parse_instance, py::arg("text"),
        "Parse an instance from its JSON text form.");

  m.def(
      "validate",
      [](const BlpInstance& inst) {
        const blp::ValidationReport report = blp::validate_a1(inst);
        py::dict out;
        out["a1_status"] = blp::to_string(report.a1_status);
        out["leader_set_nonempty"] = report.leader_set_nonempty;
        out["leader_set_bounded"] = report.leader_set_bounded;
        out["follower_recession_trivial"] = report.follower_recession_trivial;
        out["follower_nonempty_on_leader_vertices"] =
            report.follower_nonempty_on_leader_vertices;
        out["notes"] = report.notes;
        return out;
      },
      py::arg("instance"), "Check both levels' nonemptiness and boundedness.");

  m.def(
      "solve",
      [](const BlpInstance& inst, const std::string& method,
         const std::string& space, bool strict_faces, bool force) {
        return record_to_dict(blp::solve_instance(
            inst, make_options(method, space, strict_faces, force)));
      },
      py::arg("instance"), py::arg("method") = "auto",
      py::arg("space") = "auto", py::arg("strict_faces") = false,
      py::arg("force") = false,
      "Solve and return the solution record as a dict of exact strings.");

  m.def(
      "value_function_pieces",
      [](const BlpInstance& inst) {
        const blp::PwlConvexFunction pwl = blp::build_pwl(inst);
        std::vector<std::pair<std::vector<std::string>, std::string>> out;
        for (const blp::PwlPiece& piece : pwl.pieces) {
          out.emplace_back(from_vec(piece.slope), blp::to_string(piece.offset));
        }
        return out;
      },
      py::arg("instance"),
      "Affine pieces (slope, offset) of the follower value function.");

  m.def(
      "eval_phi",
      [](const BlpInstance& inst, const std::vector<std::string>& x) {
        const blp::PhiResult result = blp::eval_phi_direct(inst, to_vec(x));
        py::dict out;
        switch (result.status) {
          case blp::EvalStatus::Ok:
            out["status"] = "ok";
            out["value"] = blp::to_string(result.value);
            break;
          case blp::EvalStatus::InfeasibleAt:
            out["status"] = "infeasible";
            break;
          case blp::EvalStatus::Unbounded:
            out["status"] = "unbounded";
            break;
        }
        return out;
      },
      py::arg("instance"), py::arg("x"),
      "Follower optimal value at a leader point (exact strings).");

  m.def(
      "pessimistic_evaluate",
      [](const BlpInstance& inst, const std::vector<std::string>& x) {
        const blp::PessimisticEvaluation eval =
            blp::pessimistic_evaluate(inst, to_vec(x));
        py::dict out;
        out["follower_feasible"] = eval.follower_feasible;
        out["feasible"] = eval.feasible;
        if (eval.feasible) out["value"] = blp::to_string(eval.value);
        return out;
      },
      py::arg("instance"), py::arg("x"),
      "Exact pointwise pessimistic feasibility and objective.");

  m.def(
      "reduce_mis",
      [](std::size_t num_vertices,
         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         bool box) {
        blp::Graph g{num_vertices, edges};
        blp::check_graph(g);
        return blp::reduce_mis(g, box);
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("box") = false,
      "Encode a maximum-independent-set instance as a pessimistic BLP.");

  m.def(
      "mis_bruteforce",
      [](std::size_t num_vertices,
         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        blp::Graph g{num_vertices, edges};
        blp::check_graph(g);
        const blp::MisResult result = blp::solve_mis_bruteforce(g);
        return py::make_tuple(result.size, result.witness);
      },
      py::arg("num_vertices"), py::arg("edges"),
      "Exhaustive maximum independent set (size, witness).");

  m.def(
      "generate",
      [](const std::string& family, std::uint64_t seed, std::size_t nl,
         std::size_t nf, std::size_t ml, std::size_t mf) {
        blp::GenSpec spec;
        if (family == "random-optimistic") {
          spec.family = blp::InstanceFamily::RandomOptimistic;
        } else if (family == "random-pessimistic") {
          spec.family = blp::InstanceFamily::RandomPessimistic;
        } else {
          throw std::invalid_argument("unknown family: " + family);
        }
        spec.seed = seed;
        spec.num_leader_vars = nl;
        spec.num_follower_vars = nf;
        spec.num_leader_rows = ml;
        spec.num_follower_rows = mf;
        return blp::generate_instance(spec);
      },
      py::arg("family"), py::arg("seed"), py::arg("nl") = 2, py::arg("nf") = 2,
      py::arg("ml") = 2, py::arg("mf") = 2,
      "Deterministic random instance satisfying the validation checks.");
}
