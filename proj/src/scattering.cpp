#include "qgase/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgase/error.hpp"

namespace qgase {

VertexCoefficients vertex_coefficients(const MetricGraph& g) {
  const int nv = g.num_vertices();
  VertexCoefficients c;
  c.r.resize(nv);
  c.t.resize(nv);
  for (int v = 0; v < nv; ++v) {
    const int d = g.degree(v);
    if (d == 1) {
      c.r[v] = g.boundary(v) == BoundaryKind::dirichlet ? -1.0 : 1.0;
      c.t[v] = 0.0;
    } else {
      c.r[v] = 2.0 / d - 1.0;
      c.t[v] = 2.0 / d;
    }
  }
  return c;
}

PathSystem assemble_path_system(const MetricGraph& g, const VertexCoefficients& coeffs,
                                double k) {
  const int nb = g.num_bonds();
  const int l = g.num_leads();
  PathSystem sys;
  sys.k = k;
  sys.matrix = CMatrix::identity(nb);
  sys.rhs.assign(l, std::vector<cd>(nb, cd{0.0, 0.0}));

  for (int d = 0; d < nb; ++d) {
    const int head = g.bond_head(d);
    const double len = g.bond_length(d);
    const cd z = std::polar(1.0, k * len);
    sys.matrix(d, MetricGraph::reverse_bond(d)) -= z * coeffs.r[head];
    const cd zt = z * coeffs.t[head];
    for (int b : g.out_bonds(head)) {
      if (b == MetricGraph::reverse_bond(d)) continue;
      sys.matrix(d, b) -= zt;
    }
    for (int f : g.channels_at(head)) sys.rhs[f][d] = zt;
  }
  return sys;
}

std::vector<std::vector<cd>> solve_path_families(PathSystem system) {
  LuFactorization lu(std::move(system.matrix));
  std::vector<std::vector<cd>> families = std::move(system.rhs);
  for (auto& rhs : families) lu.solve_in_place(rhs);
  return families;
}

ScatteringMatrix scattering_matrix(const MetricGraph& g, const VertexCoefficients& coeffs,
                                   double k) {
  const int l = g.num_leads();
  if (l < 1) fail(ErrorCode::no_channels, "graph has no leads");

  const auto families = solve_path_families(assemble_path_system(g, coeffs, k));

  ScatteringMatrix s;
  s.k = k;
  s.entries = CMatrix(l, l);
  for (int i = 0; i < l; ++i) {
    const int a = g.channel_vertex(i);
    for (int f = 0; f < l; ++f) {
      cd value = 0.0;
      if (f == i)
        value = coeffs.r[a];
      else if (g.channel_vertex(f) == a)
        value = coeffs.t[a];
      cd paths = 0.0;
      for (const auto& [edge, other] : g.incident(a)) paths += families[f][g.bond_from(edge, a)];
      s.entries(f, i) = value + coeffs.t[a] * paths;
    }
  }
  return s;
}

ScatteringMatrix scattering_matrix(const MetricGraph& g, double k) {
  return scattering_matrix(g, vertex_coefficients(g), k);
}

ScatteringMatrix scattering_matrix_with_retry(const MetricGraph& g,
                                              const VertexCoefficients& coeffs, double k,
                                              long* retries) {
  constexpr int max_jitters = 3;
  const double step = 1e-9 * 2.0 * std::numbers::pi;
  for (int j = 0;; ++j) {
    try {
      return scattering_matrix(g, coeffs, k + j * step);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_system || j == max_jitters) throw;
      if (retries) ++*retries;
    }
  }
}

double unitarity_defect(const ScatteringMatrix& s) {
  const std::size_t l = s.entries.rows();
  double defect = 0.0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      cd acc = 0.0;
      for (std::size_t m = 0; m < l; ++m)
        acc += std::conj(s.entries(m, i)) * s.entries(m, j);
      if (i == j) acc -= 1.0;
      defect = std::max(defect, std::abs(acc));
    }
  return defect;
}

}  // namespace qgase
