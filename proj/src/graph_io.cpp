#include "qgase/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgase/error.hpp"

namespace qgase {

using nlohmann::json;

MetricGraph parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::bad_graph_file, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::bad_graph_file, "top level must be an object");

  for (const auto& [key, value] : doc.items())
    if (key != "num_vertices" && key != "edges" && key != "leads" &&
        key != "dirichlet_vertices")
      fail(ErrorCode::bad_graph_file, "unknown field '" + key + "'");
  for (const char* key : {"num_vertices", "edges", "leads"})
    if (!doc.contains(key))
      fail(ErrorCode::bad_graph_file, std::string("missing field '") + key + "'");

  if (!doc["num_vertices"].is_number_integer())
    fail(ErrorCode::bad_graph_file, "num_vertices must be an integer");
  const int num_vertices = doc["num_vertices"].get<int>();

  std::vector<Edge> edges;
  if (!doc["edges"].is_array()) fail(ErrorCode::bad_graph_file, "edges must be an array");
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number())
      fail(ErrorCode::bad_graph_file, "each edge must be [u, v, length]");
    edges.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
  }

  std::vector<Lead> leads;
  if (!doc["leads"].is_array()) fail(ErrorCode::bad_graph_file, "leads must be an array");
  for (const auto& entry : doc["leads"]) {
    if (!entry.is_number_integer())
      fail(ErrorCode::bad_graph_file, "leads must contain vertex indices");
    leads.push_back({entry.get<int>(), static_cast<int>(leads.size())});
  }

  std::vector<BoundaryKind> boundary;
  if (doc.contains("dirichlet_vertices")) {
    if (!doc["dirichlet_vertices"].is_array())
      fail(ErrorCode::bad_graph_file, "dirichlet_vertices must be an array");
    boundary.assign(std::max(num_vertices, 0), BoundaryKind::neumann);
    for (const auto& entry : doc["dirichlet_vertices"]) {
      if (!entry.is_number_integer())
        fail(ErrorCode::bad_graph_file, "dirichlet_vertices must contain vertex indices");
      const int v = entry.get<int>();
      if (v < 0 || v >= num_vertices)
        fail(ErrorCode::bad_graph_file, "dirichlet vertex " + std::to_string(v) +
                                            " outside [0," + std::to_string(num_vertices) + ")");
      boundary[v] = BoundaryKind::dirichlet;
    }
  }

  return build_graph(num_vertices, std::move(edges), std::move(leads), std::move(boundary));
}

MetricGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::bad_graph_file, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

}  // namespace qgase
