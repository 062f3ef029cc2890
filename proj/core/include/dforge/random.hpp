#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "dforge/perm.hpp"

namespace dforge {

/// Seedable generator with a fully specified output sequence: the 64-bit
/// Mersenne Twister (std::mt19937_64) plus rejection sampling for bounded
/// integers. Outputs are identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  template <typename T> void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Independent stream for worker `index`, derived with splitmix64.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

private:
  std::mt19937_64 engine_;
};

/// Uniform random permutation with the given cycle type: a uniformly shuffled
/// arrangement of {1..n} poured into the cycle skeleton.
Permutation random_of_cycle_type(const CycleType &ct, Rng &rng);

} // namespace dforge
