#include "qgase/entropy.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "qgase/error.hpp"
#include "qgase/parallel.hpp"

namespace qgase {

ProbabilityVector channel_probabilities(const ScatteringMatrix& s, int entrance) {
  const int l = static_cast<int>(s.entries.rows());
  if (entrance < 0 || entrance >= l)
    fail(ErrorCode::index_out_of_range, "entrance channel " + std::to_string(entrance));
  ProbabilityVector p;
  p.entrance = entrance;
  p.k = s.k;
  p.entries.resize(l);
  double sum = 0.0;
  for (int j = 0; j < l; ++j) {
    double v = std::norm(s.entries(j, entrance));
    if (v < 0.0 && v >= -1e-12) v = 0.0;
    if (v > 1.0 && v <= 1.0 + 1e-12) v = 1.0;
    p.entries[j] = v;
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-8)
    fail(ErrorCode::normalization_failure,
         "probabilities sum to " + std::to_string(sum) + " at k = " + std::to_string(s.k));
  return p;
}

double shannon_entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (double v : p.entries)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double period(const MetricGraph& g) {
  double length = 0.0;
  if (!g.is_equilateral(&length)) {
    std::string lengths;
    for (const Edge& e : g.edges()) {
      if (!lengths.empty()) lengths += ", ";
      lengths += std::to_string(e.length);
      if (lengths.size() > 60) {
        lengths += ", ...";
        break;
      }
    }
    fail(ErrorCode::not_equilateral, "edge lengths {" + lengths + "} are not all equal");
  }
  return 2.0 * std::numbers::pi / length;
}

namespace {

struct EntropyPoint {
  double entropy;
  ProbabilityVector probabilities;
};

EntropyPoint entropy_at(const MetricGraph& g, const VertexCoefficients& coeffs, int entrance,
                        double k, long* retries) {
  const ScatteringMatrix s = scattering_matrix_with_retry(g, coeffs, k, retries);
  ProbabilityVector p = channel_probabilities(s, entrance);
  const double h = shannon_entropy(p);
  return {h, std::move(p)};
}

}  // namespace

std::vector<CurvePoint> entropy_curve(const MetricGraph& g, int entrance,
                                      std::span<const double> grid) {
  for (double k : grid)
    if (!std::isfinite(k))
      fail(ErrorCode::invalid_argument, "grid contains a non-finite wave number");
  const VertexCoefficients coeffs = vertex_coefficients(g);
  std::vector<CurvePoint> curve(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    EntropyPoint pt = entropy_at(g, coeffs, entrance, grid[i], nullptr);
    curve[i] = {grid[i], pt.entropy, std::move(pt.probabilities)};
  });
  return curve;
}

AseResult average_scattering_entropy(const MetricGraph& g, int entrance,
                                     const QuadratureConfig& config) {
  if (entrance < 0 || entrance >= g.num_leads())
    fail(ErrorCode::index_out_of_range, "entrance channel " + std::to_string(entrance));
  const double K = period(g);
  const VertexCoefficients coeffs = vertex_coefficients(g);
  std::atomic<long> retries{0};

  auto integrand = [&](double k) {
    long local = 0;
    const double h = entropy_at(g, coeffs, entrance, k, &local).entropy;
    if (local > 0) retries.fetch_add(local, std::memory_order_relaxed);
    return h;
  };

  // Convergence is judged on the averaged value, so the raw-integral
  // tolerance carries a factor of K.
  QuadratureConfig scaled = config;
  scaled.tolerance = config.tolerance * K;

  // Real vertex coefficients give sigma(-k) = conj(sigma(k)), so H is
  // symmetric about K/2 and only half the panels need evaluating.
  const QuadratureResult q = integrate_adaptive(integrand, 0.0, K, scaled, true);

  AseResult result;
  result.value = q.value / K;
  result.entrance = entrance;
  result.period = K;
  result.panels = q.panels;
  result.error_estimate = q.error_estimate / K;
  result.singular_retries = retries.load();
  return result;
}

}  // namespace qgase
