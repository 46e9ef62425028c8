#include "qgase/ensemble.hpp"

#include <cmath>
#include <string>

#include "qgase/error.hpp"
#include "qgase/parallel.hpp"

namespace qgase {

std::pair<double, double> summary_stats(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2)
    fail(ErrorCode::too_few_samples,
         "need at least 2 samples for a standard deviation, got " + std::to_string(n));
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(n - 1))};
}

std::vector<EnsembleStats> run_ensemble(const EnsembleSpec& spec) {
  if (!family_uses_word(spec.family))
    fail(ErrorCode::unsupported_family,
         std::string("ensembles are defined for word families, got ") + to_string(spec.family));
  if (spec.samples < 2)
    fail(ErrorCode::too_few_samples, "samples must be >= 2, got " + std::to_string(spec.samples));
  if (spec.sizes.empty()) fail(ErrorCode::invalid_argument, "sizes must be non-empty");

  std::vector<EnsembleStats> all;
  all.reserve(spec.sizes.size());
  for (int size : spec.sizes) {
    EnsembleStats stats;
    stats.size = size;
    stats.values.assign(spec.samples, 0.0);
    parallel_for(static_cast<std::size_t>(spec.samples), [&](std::size_t index) {
      try {
        RandomStream stream = ensemble_substream(spec.seed, static_cast<std::uint64_t>(size),
                                                 static_cast<std::uint64_t>(index));
        const Word word = random_word(size, stream);
        const MetricGraph graph =
            build_family({spec.family, word, 0});
        stats.values[index] =
            average_scattering_entropy(graph, 0, spec.quadrature).value;
      } catch (const Error& e) {
        throw Error(e.code(), "size " + std::to_string(size) + " sample " +
                                  std::to_string(index) + ": " + e.what());
      }
    });
    const auto [mean, std_dev] = summary_stats(stats.values);
    stats.mean = mean;
    stats.std_dev = std_dev;
    all.push_back(std::move(stats));
  }
  return all;
}

}  // namespace qgase
