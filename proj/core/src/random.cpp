#include "dforge/random.hpp"

#include <numeric>

#include "dforge/error.hpp"

namespace dforge {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw InvalidInput("Rng::below needs a positive bound");
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Permutation random_of_cycle_type(const CycleType &ct, Rng &rng) {
  const std::size_t n = ct.size();
  if (n == 0)
    throw InvalidInput("random_of_cycle_type: empty cycle type");
  std::vector<Point> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), Point{0});
  rng.shuffle(std::span<Point>(arrangement));

  std::vector<std::vector<Point>> cycles;
  std::size_t offset = 0;
  for (std::size_t len : ct.parts()) {
    cycles.emplace_back(arrangement.begin() + static_cast<std::ptrdiff_t>(offset),
                        arrangement.begin() + static_cast<std::ptrdiff_t>(offset + len));
    offset += len;
  }
  return Permutation::from_cycles(n, cycles);
}

} // namespace dforge
