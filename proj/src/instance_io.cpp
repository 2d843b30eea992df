#include "blp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blp {

namespace {

using Json = nlohmann::ordered_json;

Rational parse_number(const Json& node, const std::string& where) {
  if (node.is_number_integer()) {
    return Rational(Integer(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const FormatError& err) {
      throw FormatError(where + ": " + err.what());
    }
  }
  throw FormatError(where + ": expected an integer or a rational string");
}

Json emit_number(const Rational& value) {
  if (denominator(value) == 1) {
    const Integer& num = numerator(value);
    static const Integer kLimit = Integer(1) << 53;
    if (num > -kLimit && num < kLimit) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(to_string(value));
}

Vec parse_vector(const Json& node, const std::string& where) {
  if (!node.is_array()) throw FormatError(where + ": expected an array");
  Vec out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(parse_number(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix parse_matrix(const Json& node, std::size_t expected_cols,
                    const std::string& where) {
  if (!node.is_array()) throw FormatError(where + ": expected an array of rows");
  Matrix out(node.size(), expected_cols);
  for (std::size_t r = 0; r < node.size(); ++r) {
    const std::string row_where = where + " row " + std::to_string(r);
    if (!node[r].is_array()) throw FormatError(row_where + ": expected an array");
    if (node[r].size() != expected_cols) {
      throw FormatError(row_where + ": expected " +
                        std::to_string(expected_cols) + " entries, got " +
                        std::to_string(node[r].size()));
    }
    for (std::size_t c = 0; c < expected_cols; ++c) {
      out(r, c) = parse_number(node[r][c],
                               row_where + " col " + std::to_string(c));
    }
  }
  return out;
}

Json emit_vector(const Vec& v) {
  Json out = Json::array();
  for (const auto& entry : v) out.push_back(emit_number(entry));
  return out;
}

Json emit_matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(emit_number(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

const Json& require(const Json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw FormatError(where + ": missing required key '" + key + "'");
  }
  return *it;
}

Json parse_document(const std::string& bytes, const char* what) {
  Json doc = Json::parse(bytes, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw FormatError(std::string(what) + ": not a JSON object");
  }
  return doc;
}

}  // namespace

BlpInstance parse_instance(const std::string& bytes) {
  Json doc = parse_document(bytes, "instance");

  BlpInstance inst;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) {
    inst.name = it->get<std::string>();
  }
  const std::string sense = require(doc, "sense", "instance").get<std::string>();
  if (sense == "optimistic") {
    inst.sense = ProblemSense::Optimistic;
  } else if (sense == "pessimistic") {
    inst.sense = ProblemSense::Pessimistic;
  } else {
    throw FormatError("instance.sense: expected 'optimistic' or 'pessimistic'");
  }
  inst.num_leader_vars =
      require(doc, "num_leader_vars", "instance").get<std::size_t>();
  inst.num_follower_vars =
      require(doc, "num_follower_vars", "instance").get<std::size_t>();

  const Json& leader = require(doc, "leader", "instance");
  inst.leader_a =
      parse_matrix(require(leader, "A", "leader"), inst.num_leader_vars,
                   "leader.A");
  inst.leader_g =
      parse_matrix(require(leader, "G", "leader"), inst.num_follower_vars,
                   "leader.G");
  inst.leader_h = parse_vector(require(leader, "h", "leader"), "leader.h");
  inst.leader_cost_x =
      parse_vector(require(leader, "cost_x", "leader"), "leader.cost_x");
  inst.leader_cost_y =
      parse_vector(require(leader, "cost_y", "leader"), "leader.cost_y");

  const Json& follower = require(doc, "follower", "instance");
  inst.follower_a =
      parse_matrix(require(follower, "A", "follower"), inst.num_leader_vars,
                   "follower.A");
  inst.follower_g =
      parse_matrix(require(follower, "G", "follower"), inst.num_follower_vars,
                   "follower.G");
  inst.follower_h = parse_vector(require(follower, "h", "follower"), "follower.h");
  inst.follower_cost =
      parse_vector(require(follower, "cost", "follower"), "follower.cost");

  if (inst.leader_a.rows() != inst.leader_g.rows() ||
      inst.leader_a.rows() != inst.leader_h.size()) {
    throw FormatError("leader: A, G and h row counts disagree");
  }
  if (inst.follower_a.rows() != inst.follower_g.rows() ||
      inst.follower_a.rows() != inst.follower_h.size()) {
    throw FormatError("follower: A, G and h row counts disagree");
  }
  if (inst.leader_cost_x.size() != inst.num_leader_vars) {
    throw FormatError("leader.cost_x: expected num_leader_vars entries");
  }
  if (inst.leader_cost_y.size() != inst.num_follower_vars) {
    throw FormatError("leader.cost_y: expected num_follower_vars entries");
  }
  if (inst.follower_cost.size() != inst.num_follower_vars) {
    throw FormatError("follower.cost: expected num_follower_vars entries");
  }
  check_instance(inst);
  return inst;
}

std::string serialize_instance(const BlpInstance& inst) {
  Json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  doc["sense"] = to_string(inst.sense);
  doc["num_leader_vars"] = inst.num_leader_vars;
  doc["num_follower_vars"] = inst.num_follower_vars;
  doc["leader"] = Json{{"A", emit_matrix(inst.leader_a)},
                       {"G", emit_matrix(inst.leader_g)},
                       {"h", emit_vector(inst.leader_h)},
                       {"cost_x", emit_vector(inst.leader_cost_x)},
                       {"cost_y", emit_vector(inst.leader_cost_y)}};
  doc["follower"] = Json{{"A", emit_matrix(inst.follower_a)},
                         {"G", emit_matrix(inst.follower_g)},
                         {"h", emit_vector(inst.follower_h)},
                         {"cost", emit_vector(inst.follower_cost)}};
  return doc.dump(2) + "\n";
}

void check_graph(const Graph& g) {
  for (const auto& [i, j] : g.edges) {
    if (i >= j) throw FormatError("graph: edges must satisfy i < j");
    if (j >= g.num_vertices) throw FormatError("graph: vertex index out of range");
  }
  for (std::size_t a = 0; a + 1 < g.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      if (g.edges[a] == g.edges[b]) throw FormatError("graph: duplicate edge");
    }
  }
}

Graph parse_graph(const std::string& bytes) {
  Json doc = parse_document(bytes, "graph");
  Graph g;
  g.num_vertices = require(doc, "num_vertices", "graph").get<std::size_t>();
  const Json& edges = require(doc, "edges", "graph");
  if (!edges.is_array()) throw FormatError("graph.edges: expected an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "graph.edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array() || edges[e].size() != 2) {
      throw FormatError(where + ": expected a pair [i, j]");
    }
    g.edges.emplace_back(edges[e][0].get<std::size_t>(),
                         edges[e][1].get<std::size_t>());
  }
  check_graph(g);
  return g;
}

std::string serialize_graph(const Graph& g) {
  Json doc;
  doc["num_vertices"] = g.num_vertices;
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string serialize_solution(const SolutionRecord& record) {
  Json doc;
  doc["status"] = record.status;
  if (record.value) doc["value"] = to_string(*record.value);
  Json x = Json::array();
  for (const auto& entry : record.x) x.push_back(to_string(entry));
  doc["x"] = std::move(x);
  if (record.y_witness) {
    Json y = Json::array();
    for (const auto& entry : *record.y_witness) y.push_back(to_string(entry));
    doc["y_witness"] = std::move(y);
  }
  if (record.certificate) {
    Json cert;
    cert["method"] = record.certificate->method;
    if (record.certificate->piece_index) {
      cert["piece_index"] = *record.certificate->piece_index;
    }
    if (record.certificate->cell_sign_vector) {
      cert["cell_sign_vector"] = *record.certificate->cell_sign_vector;
    }
    if (!record.certificate->bases.empty()) {
      Json bases = Json::array();
      for (const auto& basis : record.certificate->bases) {
        bases.push_back(Json(basis));
      }
      cert["bases"] = std::move(bases);
    }
    if (record.certificate->note) cert["note"] = *record.certificate->note;
    doc["certificate"] = std::move(cert);
  }
  doc["stats"] = Json{{"lp_solves", record.stats.lp_solves},
                      {"cells", record.stats.cells},
                      {"pieces", record.stats.pieces}};
  return doc.dump(2) + "\n";
}

SolutionRecord parse_solution(const std::string& bytes) {
  Json doc = parse_document(bytes, "solution");
  SolutionRecord record;
  record.status = require(doc, "status", "solution").get<std::string>();
  if (auto it = doc.find("value"); it != doc.end()) {
    record.value = parse_number(*it, "solution.value");
  }
  record.x = parse_vector(require(doc, "x", "solution"), "solution.x");
  if (auto it = doc.find("y_witness"); it != doc.end()) {
    record.y_witness = parse_vector(*it, "solution.y_witness");
  }
  if (auto it = doc.find("stats"); it != doc.end()) {
    record.stats.lp_solves = it->value("lp_solves", std::uint64_t(0));
    record.stats.cells = it->value("cells", std::uint64_t(0));
    record.stats.pieces = it->value("pieces", std::uint64_t(0));
  }
  if (auto it = doc.find("certificate"); it != doc.end()) {
    SolutionRecord::Certificate cert;
    cert.method = it->value("method", std::string());
    if (auto piece = it->find("piece_index"); piece != it->end()) {
      cert.piece_index = piece->get<std::size_t>();
    }
    if (auto sign = it->find("cell_sign_vector"); sign != it->end()) {
      cert.cell_sign_vector = sign->get<std::string>();
    }
    if (auto bases = it->find("bases"); bases != it->end()) {
      for (const auto& basis : *bases) {
        cert.bases.push_back(basis.get<std::vector<std::size_t>>());
      }
    }
    if (auto note = it->find("note"); note != it->end()) {
      cert.note = note->get<std::string>();
    }
    record.certificate = std::move(cert);
  }
  return record;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file: " + path);
  out << contents;
}

}  // namespace blp
