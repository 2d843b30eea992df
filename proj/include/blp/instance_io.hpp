#pragma once

#include <optional>
#include <string>

#include "blp/instance.hpp"

namespace blp {

/// Parses the JSON instance format. Malformed fields raise FormatError with
/// the offending location ("leader.A row 2", ...).
BlpInstance parse_instance(const std::string& bytes);

/// Serializes bit-exactly: parse(serialize(i)) == i structurally. Integers
/// that fit a JSON number are emitted as numbers, everything else as
/// canonical rational strings.
std::string serialize_instance(const BlpInstance& inst);

struct Graph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, 0-based
};

void check_graph(const Graph& g);
Graph parse_graph(const std::string& bytes);
std::string serialize_graph(const Graph& g);

/// Machine-readable solve output, mirroring the solution file schema.
struct SolutionRecord {
  std::string status;  // "optimal" | "infeasible" | "unbounded"
  std::optional<Rational> value;
  Vec x;
  std::optional<Vec> y_witness;
  struct Certificate {
    std::string method;
    std::optional<std::size_t> piece_index;
    std::optional<std::string> cell_sign_vector;
    std::vector<std::vector<std::size_t>> bases;
    std::optional<std::string> note;
  };
  std::optional<Certificate> certificate;
  struct Stats {
    std::uint64_t lp_solves = 0;
    std::uint64_t cells = 0;
    std::uint64_t pieces = 0;
  };
  Stats stats;
};

std::string serialize_solution(const SolutionRecord& record);
SolutionRecord parse_solution(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace blp
