#pragma once

#include "qgase/graph.hpp"
#include "qgase/scattering.hpp"

namespace qgase::oracle {

/// Brute-force cross-check for the path-family solver.
///
/// Works with the outgoing wave amplitude on every directed bond instead
/// of path families: an entering wave injects t_a onto each bond leaving
/// the entrance vertex, propagation along a bond multiplies by its phase,
/// and arrival at a vertex scatters with (r, t) onto the outgoing bonds.
/// The fixed point (I - T(k)) c = injection is solved per entrance
/// channel by a self-contained Gauss-Jordan elimination; nothing is
/// shared with the production solver.
ScatteringMatrix bond_scattering_matrix(const MetricGraph& g, double k);

/// max_ij |a_ij - b_ij|
double max_deviation(const ScatteringMatrix& a, const ScatteringMatrix& b);

}  // namespace qgase::oracle
