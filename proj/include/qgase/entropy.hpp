#pragma once

#include <span>
#include <vector>

#include "qgase/graph.hpp"
#include "qgase/quadrature.hpp"
#include "qgase/scattering.hpp"

namespace qgase {

/// Channel exit probabilities |sigma(j, entrance)|^2 at one wave number.
struct ProbabilityVector {
  std::vector<double> entries;
  int entrance = 0;
  double k = 0.0;
};

/// Throws Error(normalization_failure) when the entries sum away from 1
/// by more than 1e-8. Round-off slightly outside [0,1] (within 1e-12)
/// is clamped.
ProbabilityVector channel_probabilities(const ScatteringMatrix& s, int entrance);

/// -sum p_j log2 p_j with 0 log 0 = 0; in [0, log2 l].
double shannon_entropy(const ProbabilityVector& p);

/// Period K = 2 pi / l of the scattering probabilities for an
/// equilateral graph with common edge length l.
/// Throws Error(not_equilateral) otherwise.
double period(const MetricGraph& g);

struct CurvePoint {
  double k = 0.0;
  double entropy = 0.0;
  ProbabilityVector probabilities;
};

/// Pointwise H(k) over the given grid; resonant nodes are jittered.
std::vector<CurvePoint> entropy_curve(const MetricGraph& g, int entrance,
                                      std::span<const double> grid);

struct AseResult {
  double value = 0.0;  // bits
  int entrance = 0;
  double period = 0.0;
  int panels = 0;
  double error_estimate = 0.0;
  long singular_retries = 0;
};

/// Average scattering entropy (1/K) int_0^K H(k) dk by adaptive composite
/// Gauss-Legendre panels. Requires an equilateral graph.
AseResult average_scattering_entropy(const MetricGraph& g, int entrance = 0,
                                     const QuadratureConfig& config = {});

}  // namespace qgase
