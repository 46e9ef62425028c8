#pragma once

#include <functional>
#include <vector>

namespace qgase {

struct QuadratureConfig {
  double tolerance = 1e-7;
  int initial_panels = 64;
  int nodes_per_panel = 16;
  int max_doublings = 6;
};

/// Gauss-Legendre rule on [-1, 1]. Nodes ascending, exactly symmetric
/// about 0 (mirrored in construction). Cached per order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

struct QuadratureResult {
  double value = 0.0;
  int panels = 0;
  double error_estimate = 0.0;
  int doublings = 0;
};

/// Composite Gauss-Legendre over [a, b]. The panel count starts at
/// cfg.initial_panels and doubles until two successive estimates differ
/// by less than cfg.tolerance; throws Error(no_convergence) after
/// cfg.max_doublings. Panels use open interior nodes only, so the
/// endpoints are never evaluated.
///
/// With symmetric_about_midpoint set, only the lower half of the panels
/// is evaluated and the sum doubled; the integrand must satisfy
/// f(a + b - x) = f(x). Falls back to full evaluation when the panel
/// count is odd.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg,
                                    bool symmetric_about_midpoint = false);

}  // namespace qgase
