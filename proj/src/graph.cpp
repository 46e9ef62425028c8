#include "qgase/graph.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <string>

#include "qgase/error.hpp"

namespace qgase {

namespace {
std::string edge_str(int idx, const Edge& e) {
  return "edge " + std::to_string(idx) + " (" + std::to_string(e.u) + "," +
         std::to_string(e.v) + ")";
}
}  // namespace

BoundaryKind MetricGraph::boundary(int v) const {
  if (v < 0 || v >= num_vertices_)
    fail(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
  return boundary_[v];
}

int MetricGraph::degree(int v) const {
  if (v < 0 || v >= num_vertices_)
    fail(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
  return degree_[v];
}

const std::vector<std::pair<int, int>>& MetricGraph::incident(int v) const {
  if (v < 0 || v >= num_vertices_)
    fail(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
  return incident_[v];
}

const std::vector<int>& MetricGraph::channels_at(int v) const {
  if (v < 0 || v >= num_vertices_)
    fail(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
  return channels_at_[v];
}

int MetricGraph::channel_vertex(int channel) const {
  if (channel < 0 || channel >= num_leads())
    fail(ErrorCode::index_out_of_range, "channel " + std::to_string(channel));
  return channel_vertex_[channel];
}

std::vector<DirectedBond> MetricGraph::directed_bonds() const {
  std::vector<DirectedBond> bonds;
  bonds.reserve(num_bonds());
  for (int s = 0; s < num_edges(); ++s) {
    bonds.push_back({s, BondOrientation::forward, 2 * s});
    bonds.push_back({s, BondOrientation::backward, 2 * s + 1});
  }
  return bonds;
}

int MetricGraph::bond_tail(int bond) const {
  const Edge& e = edges_[bond >> 1];
  return (bond & 1) == 0 ? e.u : e.v;
}

int MetricGraph::bond_head(int bond) const {
  const Edge& e = edges_[bond >> 1];
  return (bond & 1) == 0 ? e.v : e.u;
}

const std::vector<int>& MetricGraph::out_bonds(int v) const { return out_bonds_[v]; }

int MetricGraph::bond_from(int edge, int from) const {
  return edges_[edge].u == from ? 2 * edge : 2 * edge + 1;
}

bool MetricGraph::is_equilateral(double* common_length) const {
  double len = edges_.empty() ? 1.0 : edges_.front().length;
  for (const Edge& e : edges_)
    if (std::abs(e.length - len) > 1e-12 * len) return false;
  if (common_length) *common_length = len;
  return true;
}

MetricGraph MetricGraph::subdivide_edge(int edge, double fraction) const {
  if (edge < 0 || edge >= num_edges())
    fail(ErrorCode::index_out_of_range, "edge " + std::to_string(edge));
  if (!(fraction > 0.0 && fraction < 1.0))
    fail(ErrorCode::fraction_out_of_range,
         "fraction must lie in (0,1), got " + std::to_string(fraction));
  std::vector<Edge> edges = edges_;
  const Edge old = edges[edge];
  const int mid = num_vertices_;
  edges[edge] = {old.u, mid, fraction * old.length};
  edges.push_back({mid, old.v, (1.0 - fraction) * old.length});
  std::vector<BoundaryKind> boundary = boundary_;
  boundary.push_back(BoundaryKind::neumann);
  return build_graph(num_vertices_ + 1, std::move(edges), leads_, std::move(boundary));
}

MetricGraph MetricGraph::scale_lengths(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    fail(ErrorCode::non_positive_factor, "factor " + std::to_string(factor));
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) e.length *= factor;
  return build_graph(num_vertices_, std::move(edges), leads_, boundary_);
}

void MetricGraph::finalize() {
  const int v = num_vertices_;
  if (v < 1) fail(ErrorCode::index_out_of_range, "graph needs at least one vertex");
  if (boundary_.empty()) boundary_.assign(v, BoundaryKind::neumann);
  if (static_cast<int>(boundary_.size()) != v)
    fail(ErrorCode::invalid_argument,
         "boundary table has " + std::to_string(boundary_.size()) + " entries for " +
             std::to_string(v) + " vertices");

  incident_.assign(v, {});
  channels_at_.assign(v, {});
  out_bonds_.assign(v, {});
  degree_.assign(v, 0);

  std::map<std::pair<int, int>, int> seen;
  for (int s = 0; s < num_edges(); ++s) {
    const Edge& e = edges_[s];
    if (e.u < 0 || e.u >= v || e.v < 0 || e.v >= v)
      fail(ErrorCode::index_out_of_range, edge_str(s, e) + " endpoint outside [0," +
                                              std::to_string(v) + ")");
    if (e.u == e.v)
      fail(ErrorCode::self_loop, edge_str(s, e) + " is a self-loop at vertex " +
                                     std::to_string(e.u));
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      fail(ErrorCode::non_positive_length,
           edge_str(s, e) + " has length " + std::to_string(e.length));
    const auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = seen.emplace(key, s);
    if (!fresh)
      fail(ErrorCode::duplicate_edge, edge_str(s, e) + " duplicates edge " +
                                          std::to_string(it->second));
    incident_[e.u].emplace_back(s, e.v);
    incident_[e.v].emplace_back(s, e.u);
    out_bonds_[e.u].push_back(2 * s);
    out_bonds_[e.v].push_back(2 * s + 1);
    ++degree_[e.u];
    ++degree_[e.v];
  }

  const int l = num_leads();
  channel_vertex_.assign(l, -1);
  for (std::size_t i = 0; i < leads_.size(); ++i) {
    const Lead& lead = leads_[i];
    if (lead.vertex < 0 || lead.vertex >= v)
      fail(ErrorCode::index_out_of_range,
           "lead " + std::to_string(i) + " vertex " + std::to_string(lead.vertex));
    if (lead.channel < 0 || lead.channel >= l || channel_vertex_[lead.channel] != -1)
      fail(ErrorCode::invalid_channel_order,
           "lead " + std::to_string(i) + " channel " + std::to_string(lead.channel) +
               " does not make channels a permutation of 0.." + std::to_string(l - 1));
    channel_vertex_[lead.channel] = lead.vertex;
    channels_at_[lead.vertex].push_back(lead.channel);
    ++degree_[lead.vertex];
  }

  for (int u = 0; u < v; ++u)
    if (degree_[u] == 0)
      fail(ErrorCode::disconnected_channel, "vertex " + std::to_string(u) + " is isolated");

  for (int u = 0; u < v; ++u)
    if (boundary_[u] == BoundaryKind::dirichlet && degree_[u] != 1)
      fail(ErrorCode::dirichlet_on_interior_vertex,
           "vertex " + std::to_string(u) + " has degree " + std::to_string(degree_[u]));

  // all vertices must be mutually reachable through edges
  std::vector<char> reached(v, 0);
  std::queue<int> frontier;
  frontier.push(0);
  reached[0] = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const auto& [edge, other] : incident_[u])
      if (!reached[other]) {
        reached[other] = 1;
        frontier.push(other);
      }
  }
  for (int u = 0; u < v; ++u)
    if (!reached[u])
      fail(ErrorCode::disconnected_channel,
           "vertex " + std::to_string(u) + " is not reachable from vertex 0");
}

MetricGraph build_graph(int num_vertices, std::vector<Edge> edges, std::vector<Lead> leads,
                        std::vector<BoundaryKind> boundary) {
  MetricGraph g;
  g.num_vertices_ = num_vertices;
  g.edges_ = std::move(edges);
  g.leads_ = std::move(leads);
  g.boundary_ = std::move(boundary);
  g.finalize();
  return g;
}

}  // namespace qgase
