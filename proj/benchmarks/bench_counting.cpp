#include <benchmark/benchmark.h>

#include "dforge/counting.hpp"

using namespace dforge;

namespace {

void BM_NCount(benchmark::State &state) {
  const auto b = static_cast<std::size_t>(state.range(0));
  const auto q = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(n_count(b, q));
}
BENCHMARK(BM_NCount)->Args({2, 12})->Args({3, 8})->Args({3, 20})->Args({4, 12});

void BM_IMCount(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(i_m_count(3, 20, 10));
}
BENCHMARK(BM_IMCount);

void BM_NCensus(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(n_count_bruteforce(2, 5));
}
BENCHMARK(BM_NCensus)->Unit(benchmark::kMillisecond);

} // namespace
