#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qgase/entropy.hpp"
#include "qgase/families.hpp"

namespace qgase {

/// Random-word ensemble over a word family (line, circle, circle2).
struct EnsembleSpec {
  Family family = Family::line;
  std::vector<int> sizes;
  int samples = 100;
  std::uint64_t seed = 0;
  QuadratureConfig quadrature;
};

struct EnsembleStats {
  int size = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  std::vector<double> values;  // per-sample ASE, in sample order
};

/// (mean, sample standard deviation with divisor n-1), summed in index
/// order. Throws Error(too_few_samples) for fewer than two values.
std::pair<double, double> summary_stats(std::span<const double> values);

/// For each size draws `samples` words from sub-streams keyed by
/// (seed, size, sample index), builds the family graph, and computes the
/// ASE for entrance channel 0. Samples may run concurrently; results are
/// a pure function of the spec.
std::vector<EnsembleStats> run_ensemble(const EnsembleSpec& spec);

}  // namespace qgase
