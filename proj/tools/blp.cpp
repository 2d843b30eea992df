#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blp/driver.hpp"
#include "blp/reduction.hpp"

namespace {

// Exit codes: 0 optimal/valid, 1 infeasible, 2 unbounded or A1 violation,
// 3 input error, 4 precondition refusal.
constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kA1 = 2;
constexpr int kInputError = 3;
constexpr int kRefused = 4;

blp::BlpInstance load_instance(const std::string& path) {
  return blp::parse_instance(blp::read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    blp::write_file(out_path, text);
  }
}

int run_validate(const std::string& path) {
  const blp::BlpInstance inst = load_instance(path);
  const blp::ValidationReport report = blp::validate_a1(inst);
  std::cout << "a1_status: " << blp::to_string(report.a1_status) << "\n";
  std::cout << "leader_set_nonempty: " << report.leader_set_nonempty << "\n";
  std::cout << "leader_set_bounded: " << report.leader_set_bounded << "\n";
  std::cout << "follower_recession_trivial: " << report.follower_recession_trivial
            << "\n";
  std::cout << "follower_nonempty_on_leader_vertices: "
            << report.follower_nonempty_on_leader_vertices << "\n";
  for (const std::string& note : report.notes) {
    std::cout << "note: " << note << "\n";
  }
  return report.a1_status == blp::A1Status::Satisfied ? kOk : kA1;
}

int run_solve(const std::string& path, const std::string& method,
              const std::string& space, bool strict_faces, bool force,
              const std::string& out_path) {
  const blp::BlpInstance inst = load_instance(path);
  blp::DriverOptions options;
  options.strict_faces = strict_faces;
  options.force = force;
  if (method == "auto") options.method = blp::SolveMethod::Auto;
  else if (method == "thm1") options.method = blp::SolveMethod::Thm1;
  else if (method == "thm2") options.method = blp::SolveMethod::Thm2;
  else if (method == "minmax") options.method = blp::SolveMethod::MinMax;
  else if (method == "minmin") options.method = blp::SolveMethod::MinMin;
  else if (method == "oracle") options.method = blp::SolveMethod::Oracle;
  else {
    std::cerr << "unknown method: " << method << "\n";
    return kInputError;
  }
  if (space == "wt") options.space = blp::LiftedMode::WT;
  else if (space == "xt") options.space = blp::LiftedMode::XT;
  else if (!space.empty() && space != "auto") {
    std::cerr << "unknown space: " << space << "\n";
    return kInputError;
  }

  const blp::SolutionRecord record = blp::solve_instance(inst, options);
  emit(blp::serialize_solution(record), out_path);
  return record.status == "optimal" ? kOk : kInfeasible;
}

int run_value_fn(const std::string& path, bool pieces, const std::string& at) {
  const blp::BlpInstance inst = load_instance(path);
  const blp::PwlConvexFunction pwl = blp::build_pwl(inst);
  if (pieces || at.empty()) {
    for (const blp::PwlPiece& piece : pwl.pieces) {
      std::cout << "(";
      for (std::size_t j = 0; j < piece.slope.size(); ++j) {
        if (j > 0) std::cout << ", ";
        std::cout << blp::to_string(piece.slope[j]);
      }
      std::cout << "; " << blp::to_string(piece.offset) << ")\n";
    }
  }
  if (!at.empty()) {
    blp::Vec x;
    std::size_t start = 0;
    while (start <= at.size()) {
      const std::size_t comma = at.find(',', start);
      const std::string token =
          at.substr(start, comma == std::string::npos ? comma : comma - start);
      x.push_back(blp::parse_rational(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    const blp::PhiResult direct = blp::eval_phi_direct(inst, x);
    if (direct.status == blp::EvalStatus::InfeasibleAt) {
      std::cout << "phi: infeasible\n";
      return kInfeasible;
    }
    if (direct.status == blp::EvalStatus::Unbounded) {
      std::cout << "phi: unbounded\n";
      return kA1;
    }
    std::cout << "phi: " << blp::to_string(direct.value) << "\n";
    if (blp::pwl_eval(pwl, x) != direct.value) {
      std::cerr << "piece representation disagrees with direct LP\n";
      return kA1;
    }
  }
  return kOk;
}

int run_reduce(const std::string& graph_path, const std::string& out_path,
               bool with_box) {
  const blp::Graph g = blp::parse_graph(blp::read_file(graph_path));
  const blp::BlpInstance inst = blp::reduce_mis(g, with_box);
  emit(blp::serialize_instance(inst), out_path);
  return kOk;
}

int run_mis(const std::string& graph_path, int threshold) {
  const blp::Graph g = blp::parse_graph(blp::read_file(graph_path));
  const blp::MisResult result = blp::solve_mis_bruteforce(g);
  std::cout << "size: " << result.size << "\n";
  std::cout << "witness:";
  for (std::size_t v : result.witness) std::cout << " " << v;
  std::cout << "\n";
  if (threshold >= 0) {
    std::cout << "decision: "
              << (result.size >= static_cast<std::size_t>(threshold) ? "yes"
                                                                     : "no")
              << "\n";
  }
  return kOk;
}

int run_check(const std::string& inst_path, const std::string& solution_path) {
  const blp::BlpInstance inst = load_instance(inst_path);
  const blp::SolutionRecord record =
      blp::parse_solution(blp::read_file(solution_path));
  const blp::CheckReport report = blp::check_solution(inst, record);
  for (const std::string& reason : report.reasons) {
    std::cout << reason << "\n";
  }
  std::cout << (report.valid ? "valid" : "invalid") << "\n";
  return report.valid ? kOk : kInfeasible;
}

int run_gen(const std::string& family, std::uint64_t seed, std::size_t nl,
            std::size_t nf, std::size_t ml, std::size_t mf,
            const std::string& out_path) {
  blp::GenSpec spec;
  if (family == "random-optimistic") {
    spec.family = blp::InstanceFamily::RandomOptimistic;
  } else if (family == "random-pessimistic") {
    spec.family = blp::InstanceFamily::RandomPessimistic;
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return kInputError;
  }
  spec.seed = seed;
  spec.num_leader_vars = nl;
  spec.num_follower_vars = nf;
  spec.num_leader_rows = ml;
  spec.num_follower_rows = mf;
  emit(blp::serialize_instance(blp::generate_instance(spec)), out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver suite for bilevel linear programs"};
  app.require_subcommand(1);

  std::string inst_path, out_path, method = "auto", space = "auto";
  bool strict_faces = false, force = false;

  auto* validate = app.add_subcommand("validate", "Validate instance assumptions");
  validate->add_option("instance", inst_path)->required();

  auto* solve = app.add_subcommand("solve", "Solve a bilevel instance");
  solve->add_option("instance", inst_path)->required();
  solve->add_option("--method", method,
                    "auto|thm1|thm2|minmax|minmin|oracle");
  solve->add_option("--space", space, "wt|xt");
  solve->add_flag("--strict-faces", strict_faces);
  solve->add_flag("--force", force);
  solve->add_option("-o,--output", out_path);

  std::string at;
  bool pieces = false;
  auto* value_fn = app.add_subcommand("value-fn", "Follower value function");
  value_fn->add_option("instance", inst_path)->required();
  value_fn->add_flag("--pieces", pieces);
  value_fn->add_option("--at", at, "comma-separated leader point");

  std::string graph_path;
  bool with_box = false;
  auto* reduce = app.add_subcommand("reduce-mis",
                                    "Encode a MIS instance as a pessimistic BLP");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("-o,--output", out_path);
  reduce->add_flag("--box", with_box);

  int threshold = -1;
  auto* mis = app.add_subcommand("mis", "Brute-force maximum independent set");
  mis->add_option("graph", graph_path)->required();
  mis->add_option("--q", threshold, "decision threshold");

  std::string solution_path;
  auto* check = app.add_subcommand("check", "Re-verify a solution file");
  check->add_option("instance", inst_path)->required();
  check->add_option("solution", solution_path)->required();

  std::string family = "random-optimistic";
  std::uint64_t seed = 0;
  std::size_t nl = 2, nf = 2, ml = 2, mf = 2;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family, "random-optimistic|random-pessimistic");
  gen->add_option("--seed", seed);
  gen->add_option("--nl", nl);
  gen->add_option("--nf", nf);
  gen->add_option("--ml", ml);
  gen->add_option("--mf", mf);
  gen->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) return run_validate(inst_path);
    if (solve->parsed()) {
      return run_solve(inst_path, method, space, strict_faces, force, out_path);
    }
    if (value_fn->parsed()) return run_value_fn(inst_path, pieces, at);
    if (reduce->parsed()) return run_reduce(graph_path, out_path, with_box);
    if (mis->parsed()) return run_mis(graph_path, threshold);
    if (check->parsed()) return run_check(inst_path, solution_path);
    if (gen->parsed()) return run_gen(family, seed, nl, nf, ml, mf, out_path);
  } catch (const blp::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const blp::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const blp::A1ViolationError& e) {
    std::cerr << "assumption violation: " << e.what() << "\n";
    return kA1;
  } catch (const blp::NoVerifiedCandidateError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kA1;
  } catch (const blp::PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
