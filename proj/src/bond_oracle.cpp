#include "qgase/bond_oracle.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "qgase/error.hpp"

namespace qgase::oracle {

namespace {

// Gauss-Jordan with partial pivoting on the augmented system [A | B].
// Deliberately self-contained; see the header.
void gauss_jordan(std::vector<std::vector<cd>>& a, std::vector<std::vector<cd>>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    if (std::abs(a[piv][col]) < 1e-13)
      fail(ErrorCode::singular_system, "oracle elimination hit a zero pivot");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    const cd inv = 1.0 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) a[col][j] *= inv;
    for (std::size_t j = 0; j < m; ++j) b[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const cd factor = a[i][col];
      if (factor == cd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[col][j];
      for (std::size_t j = 0; j < m; ++j) b[i][j] -= factor * b[col][j];
    }
  }
}

}  // namespace

ScatteringMatrix bond_scattering_matrix(const MetricGraph& g, double k) {
  const int l = g.num_leads();
  if (l < 1) fail(ErrorCode::no_channels, "graph has no leads");
  const int nv = g.num_vertices();
  const int nb = g.num_bonds();

  std::vector<cd> r(nv), t(nv);
  for (int v = 0; v < nv; ++v) {
    const int d = g.degree(v);
    if (d == 1) {
      r[v] = g.boundary(v) == BoundaryKind::dirichlet ? -1.0 : 1.0;
      t[v] = 0.0;
    } else {
      r[v] = 2.0 / d - 1.0;
      t[v] = 2.0 / d;
    }
  }

  // (I - T) c = injection, T[b][d] = phase(d) * (r or t at head(d))
  // for every bond b leaving head(d).
  std::vector<std::vector<cd>> a(nb, std::vector<cd>(nb, cd{0.0, 0.0}));
  std::vector<std::vector<cd>> c(nb, std::vector<cd>(l, cd{0.0, 0.0}));
  for (int d = 0; d < nb; ++d) a[d][d] = 1.0;
  for (int d = 0; d < nb; ++d) {
    const int head = g.bond_head(d);
    const cd z = std::polar(1.0, k * g.bond_length(d));
    for (int b : g.out_bonds(head))
      a[b][d] -= z * (b == MetricGraph::reverse_bond(d) ? r[head] : t[head]);
  }
  for (int i = 0; i < l; ++i) {
    const int entrance = g.channel_vertex(i);
    for (int b : g.out_bonds(entrance)) c[b][i] = t[entrance];
  }
  if (nb > 0) gauss_jordan(a, c);

  ScatteringMatrix s;
  s.k = k;
  s.entries = CMatrix(l, l);
  for (int i = 0; i < l; ++i) {
    const int entrance = g.channel_vertex(i);
    for (int f = 0; f < l; ++f) {
      const int exit = g.channel_vertex(f);
      cd value = 0.0;
      if (f == i)
        value = r[entrance];
      else if (exit == entrance)
        value = t[entrance];
      for (int d = 0; d < nb; ++d)
        if (g.bond_head(d) == exit)
          value += c[d][i] * std::polar(1.0, k * g.bond_length(d)) * t[exit];
      s.entries(f, i) = value;
    }
  }
  return s;
}

double max_deviation(const ScatteringMatrix& a, const ScatteringMatrix& b) {
  double dev = 0.0;
  for (std::size_t i = 0; i < a.entries.rows(); ++i)
    for (std::size_t j = 0; j < a.entries.cols(); ++j)
      dev = std::max(dev, std::abs(a.entries(i, j) - b.entries(i, j)));
  return dev;
}

}  // namespace qgase::oracle
