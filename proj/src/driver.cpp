#include "blp/driver.hpp"

namespace blp {

namespace {

SolutionRecord from_optimistic(const OptimisticResult& result,
                               const std::string& method,
                               std::optional<std::string> note,
                               std::size_t pieces) {
  SolutionRecord record;
  record.status =
      result.status == BilevelStatus::Optimal ? "optimal" : "infeasible";
  SolutionRecord::Certificate cert;
  cert.method = method;
  cert.piece_index = result.winning_piece;
  cert.note = std::move(note);
  record.certificate = std::move(cert);
  record.stats.lp_solves = result.lp_count;
  record.stats.pieces = pieces;
  if (result.status == BilevelStatus::Optimal) {
    record.value = result.value;
    record.x = result.x;
    record.y_witness = result.y;
  }
  return record;
}

SolutionRecord from_pessimistic(const PessimisticResult& result,
                                std::size_t pieces) {
  SolutionRecord record;
  record.status =
      result.status == BilevelStatus::Optimal ? "optimal" : "infeasible";
  SolutionRecord::Certificate cert;
  cert.method = "thm2";
  cert.piece_index = result.piece_index;
  if (!result.cell_sign_vector.empty()) {
    cert.cell_sign_vector = sign_vector_string(result.cell_sign_vector);
  }
  cert.bases = result.active_bases;
  record.certificate = std::move(cert);
  record.stats.lp_solves = result.counts.lp_solves;
  record.stats.cells = result.counts.cells;
  record.stats.pieces = pieces;
  if (result.status == BilevelStatus::Optimal) {
    record.value = result.value;
    record.x = result.x;
  }
  return record;
}

SolveMethod dispatch(const BlpInstance& inst, SolveMethod requested) {
  if (requested != SolveMethod::Auto) return requested;
  if (is_minmin(inst)) return SolveMethod::MinMin;
  if (is_minmax(inst)) return SolveMethod::MinMax;
  return inst.sense == ProblemSense::Optimistic ? SolveMethod::Thm1
                                                : SolveMethod::Thm2;
}

}  // namespace

SolutionRecord solve_instance(const BlpInstance& inst,
                              const DriverOptions& options) {
  SolveOptions solve_options;
  solve_options.force = options.force;
  const std::optional<std::string> sense_note =
      inst.sense == ProblemSense::Pessimistic
          ? std::optional<std::string>(
                "collapse is valid for both optimistic and pessimistic "
                "tie-breaking")
          : std::nullopt;

  switch (dispatch(inst, options.method)) {
    case SolveMethod::MinMin:
      return from_optimistic(solve_minmin(inst), "minmin", sense_note, 0);
    case SolveMethod::MinMax: {
      const PwlConvexFunction pwl = build_pwl(inst);
      return from_optimistic(solve_minmax(inst, pwl), "minmax", sense_note,
                             pwl.pieces.size());
    }
    case SolveMethod::Thm1: {
      const PwlConvexFunction pwl = build_pwl(inst);
      return from_optimistic(solve_optimistic(inst, pwl, solve_options), "thm1",
                             std::nullopt, pwl.pieces.size());
    }
    case SolveMethod::Oracle: {
      if (inst.sense == ProblemSense::Pessimistic) {
        if (inst.num_leader_vars != 1) {
          throw PreconditionError(
              "oracle method for pessimistic instances requires one leader "
              "variable");
        }
        PessimisticResult result = pessimistic_1d_sweep(inst);
        SolutionRecord record = from_pessimistic(result, 0);
        record.certificate->method = "oracle";
        return record;
      }
      return from_optimistic(optimistic_oracle(inst, solve_options), "oracle",
                             std::nullopt, 0);
    }
    case SolveMethod::Thm2: {
      PessimisticOptions pess;
      pess.space = options.space;
      pess.strict_faces = options.strict_faces;
      pess.force = options.force;
      const std::size_t pieces = build_pwl(inst).pieces.size();
      return from_pessimistic(solve_pessimistic(inst, pess), pieces);
    }
    case SolveMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable solve dispatch");
}

CheckReport check_solution(const BlpInstance& inst,
                           const SolutionRecord& record) {
  CheckReport report;
  if (record.status != "optimal") {
    report.valid = true;
    report.reasons.push_back("no point to check for status " + record.status);
    return report;
  }
  if (!record.value) {
    report.reasons.push_back("optimal solution without a value");
    return report;
  }
  if (record.x.size() != inst.num_leader_vars) {
    report.reasons.push_back("solution x has wrong dimension");
    return report;
  }

  if (inst.sense == ProblemSense::Optimistic) {
    if (!record.y_witness) {
      report.reasons.push_back("optimistic solution without y_witness");
      return report;
    }
    if (!bilevel_feasible(inst, record.x, *record.y_witness)) {
      report.reasons.push_back("pair (x, y) is not bilevel feasible");
      return report;
    }
    const Rational value = dot(inst.leader_cost_x, record.x) +
                           dot(inst.leader_cost_y, *record.y_witness);
    if (value != *record.value) {
      report.reasons.push_back("objective value mismatch: expected " +
                               to_string(value));
      return report;
    }
  } else {
    const PessimisticEvaluation eval = pessimistic_evaluate(inst, record.x);
    if (!eval.feasible) {
      report.reasons.push_back("x is not pessimistically feasible");
      return report;
    }
    if (eval.value != *record.value) {
      report.reasons.push_back("objective value mismatch: expected " +
                               to_string(eval.value));
      return report;
    }
  }
  report.valid = true;
  return report;
}

}  // namespace blp
