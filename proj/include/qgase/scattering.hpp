#pragma once

#include <vector>

#include "qgase/graph.hpp"
#include "qgase/linalg.hpp"

namespace qgase {

/// Per-vertex reflection/transmission amplitudes. A Neumann vertex of
/// degree d >= 2 scatters with r = 2/d - 1, t = 2/d (degree counts leads);
/// a degree-1 dead end reflects with r = +1 (Neumann) or -1 (Dirichlet)
/// and has no transmission (t = 0).
struct VertexCoefficients {
  std::vector<cd> r;
  std::vector<cd> t;
};

VertexCoefficients vertex_coefficients(const MetricGraph& g);

/// Linear system for the directed-bond path families at wave number k.
/// Unknown P[b] is the summed amplitude of every path that enters bond
/// b's edge at its tail and eventually exits through a fixed channel f.
/// The matrix is channel-independent; one right-hand side per channel.
struct PathSystem {
  CMatrix matrix;
  std::vector<std::vector<cd>> rhs;
  double k = 0.0;
};

/// Row for bond (u -> v) with phase z = exp(i k l):
///   P_uv - z r_v P_vu - z t_v sum_{w in N(v) \ {u}} P_vw = z t_v [f at v]
/// N(v) ranges over edge neighbors only; exits through leads are carried
/// entirely by the right-hand side's delta term.
PathSystem assemble_path_system(const MetricGraph& g, const VertexCoefficients& coeffs,
                                double k);

/// One LU factorization, one back-substitution per channel.
/// Result [f][bond]. Throws Error(singular_system) at resonant k.
std::vector<std::vector<cd>> solve_path_families(PathSystem system);

struct ScatteringMatrix {
  CMatrix entries;  // entries(f, i): entrance channel i, exit channel f
  double k = 0.0;
};

/// sigma(f,i) = delta_fi r_a + (1-delta_fi) delta_ab t_a
///              + t_a sum_{j in N(a)} P_aj^(f)
/// with a, b the vertices carrying channels i and f.
ScatteringMatrix scattering_matrix(const MetricGraph& g, const VertexCoefficients& coeffs,
                                   double k);
ScatteringMatrix scattering_matrix(const MetricGraph& g, double k);

/// Retries singular solves at k + j * 1e-9 * 2pi for j = 1..3 before
/// rethrowing; adds the number of jitters used to *retries when given.
ScatteringMatrix scattering_matrix_with_retry(const MetricGraph& g,
                                              const VertexCoefficients& coeffs, double k,
                                              long* retries = nullptr);

/// max |(sigma^dagger sigma - I)_ij|
double unitarity_defect(const ScatteringMatrix& s);

}  // namespace qgase
