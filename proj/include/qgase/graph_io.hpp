#pragma once

#include <string>

#include "qgase/graph.hpp"

namespace qgase {

// Graph file format: a JSON object with
//   num_vertices        integer
//   edges               array of [u, v, length]
//   leads               array of vertex indices (array order = channel order)
//   dirichlet_vertices  optional array of vertex indices
// Unknown fields are rejected.

MetricGraph parse_graph_json(const std::string& text);
MetricGraph load_graph_file(const std::string& path);

}  // namespace qgase
