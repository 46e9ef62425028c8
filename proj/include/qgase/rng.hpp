#pragma once

#include <cstdint>

namespace qgase {

/// Deterministic counter-based stream (splitmix64). Cheap to fork:
/// independent sub-streams come from hashing (seed, size, index), so
/// parallel ensemble workers cannot perturb each other's draws.
struct RandomStream {
  std::uint64_t state = 0;

  explicit RandomStream(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  bool next_bit() { return (next() >> 63) != 0; }
};

inline std::uint64_t mix_u64(std::uint64_t x) {
  RandomStream s(x);
  return s.next();
}

/// Key for the sample at (seed, size, index).
inline RandomStream ensemble_substream(std::uint64_t seed, std::uint64_t size,
                                       std::uint64_t index) {
  return RandomStream(mix_u64(mix_u64(mix_u64(seed) ^ size) ^ index));
}

}  // namespace qgase
