#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qgase {

enum class BoundaryKind : std::uint8_t { neumann, dirichlet };

/// Finite edge between two distinct vertices. Lengths are dimensionless.
struct Edge {
  int u;
  int v;
  double length;
};

/// Semi-infinite edge attached at `vertex`; each lead is one scattering
/// channel. Channels are dense: a graph with l leads carries channels 0..l-1.
struct Lead {
  int vertex;
  int channel;
};

enum class BondOrientation : std::uint8_t { forward, backward };

/// Oriented copy of an edge. Bond 2s runs edge s forward (u -> v),
/// bond 2s+1 backward; reversal is index XOR 1.
struct DirectedBond {
  int edge;
  BondOrientation orientation;
  int index;
};

/// Immutable metric graph with leads. Construction validates:
/// no self-loops, no duplicate edges, positive lengths, in-range
/// endpoints, dense channel indices, no isolated vertices, Dirichlet
/// only on degree-1 vertices, and edge-connectivity of the vertex set.
class MetricGraph {
 public:
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_leads() const { return static_cast<int>(leads_.size()); }
  int num_bonds() const { return 2 * num_edges(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Lead>& leads() const { return leads_; }

  BoundaryKind boundary(int v) const;

  /// Incident edge count plus incident lead count.
  int degree(int v) const;

  /// (edge index, neighbor vertex) pairs, in edge declaration order.
  const std::vector<std::pair<int, int>>& incident(int v) const;

  /// Lead channels attached at v.
  const std::vector<int>& channels_at(int v) const;

  /// Vertex carrying the given channel.
  int channel_vertex(int channel) const;

  // --- directed-bond view -------------------------------------------------
  std::vector<DirectedBond> directed_bonds() const;
  int bond_tail(int bond) const;
  int bond_head(int bond) const;
  double bond_length(int bond) const { return edges_[bond >> 1].length; }
  static int reverse_bond(int bond) { return bond ^ 1; }
  /// Bond indices with tail v.
  const std::vector<int>& out_bonds(int v) const;
  /// Bond index for traversing `edge` starting at vertex `from`.
  int bond_from(int edge, int from) const;

  /// True when all edge lengths agree to within 1e-12 relative;
  /// writes the common length if so. Graphs without edges count as
  /// equilateral with unit length.
  bool is_equilateral(double* common_length = nullptr) const;

  /// New graph with edge `edge` split at `fraction` by a fresh degree-2
  /// Neumann vertex (appended as the highest index). The replaced edge
  /// keeps its slot with length fraction*l; the second half is appended.
  MetricGraph subdivide_edge(int edge, double fraction) const;

  /// New graph with every edge length multiplied by `factor`.
  MetricGraph scale_lengths(double factor) const;

  friend MetricGraph build_graph(int num_vertices, std::vector<Edge> edges,
                                 std::vector<Lead> leads,
                                 std::vector<BoundaryKind> boundary);

 private:
  MetricGraph() = default;
  void finalize();  // builds adjacency tables, validates

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Lead> leads_;
  std::vector<BoundaryKind> boundary_;
  std::vector<int> degree_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::vector<std::vector<int>> channels_at_;
  std::vector<int> channel_vertex_;
  std::vector<std::vector<int>> out_bonds_;
};

/// Validating constructor. An empty boundary vector means all-Neumann.
MetricGraph build_graph(int num_vertices, std::vector<Edge> edges, std::vector<Lead> leads,
                        std::vector<BoundaryKind> boundary = {});

}  // namespace qgase
