#include "qgase/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "qgase/error.hpp"
#include "qgase/parallel.hpp"

namespace qgase {

namespace {

GaussLegendreRule make_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  // Newton iteration on P_n; compute the negative half, mirror the rest.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // refresh dp at the converged node
    {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1)
    fail(ErrorCode::invalid_argument, "Gauss-Legendre order must be >= 1, got " +
                                          std::to_string(order));
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg,
                                    bool symmetric_about_midpoint) {
  if (!(cfg.tolerance > 0.0) || cfg.initial_panels < 1 || cfg.nodes_per_panel < 1 ||
      cfg.max_doublings < 0)
    fail(ErrorCode::invalid_argument, "quadrature config fields must be positive");
  const GaussLegendreRule& rule = gauss_legendre(cfg.nodes_per_panel);
  const std::size_t nodes = rule.nodes.size();

  double prev = 0.0;
  bool have_prev = false;
  int panels = cfg.initial_panels;
  for (int stage = 0; stage <= cfg.max_doublings; ++stage, panels *= 2) {
    const bool mirror = symmetric_about_midpoint && panels % 2 == 0;
    const std::size_t eval_panels = mirror ? panels / 2 : panels;
    const double width = (b - a) / panels;
    const std::size_t count = eval_panels * nodes;

    std::vector<double> values(count);
    parallel_for(count, [&](std::size_t idx) {
      const std::size_t p = idx / nodes;
      const std::size_t j = idx % nodes;
      const double center = a + (static_cast<double>(p) + 0.5) * width;
      values[idx] = f(center + 0.5 * width * rule.nodes[j]);
    });

    double sum = 0.0;
    for (std::size_t idx = 0; idx < count; ++idx) sum += rule.weights[idx % nodes] * values[idx];
    const double integral = sum * (0.5 * width) * (mirror ? 2.0 : 1.0);

    if (have_prev) {
      const double diff = std::abs(integral - prev);
      if (diff < cfg.tolerance)
        return {integral, panels, diff, stage};
    }
    prev = integral;
    have_prev = true;
  }
  fail(ErrorCode::no_convergence,
       "estimates still differ by more than " + std::to_string(cfg.tolerance) + " after " +
           std::to_string(cfg.max_doublings) + " panel doublings");
}

}  // namespace qgase
