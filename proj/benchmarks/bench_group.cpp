#include <benchmark/benchmark.h>

#include "dforge/group.hpp"
#include "dforge/search.hpp"

using namespace dforge;

namespace {

// <(1 2 ... n), (1 2)> = S_n: the stabilizer chain has n - 1 levels.
void BM_OrderSymmetric(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::array<Permutation, 2> gens{Permutation::standard_cycle(n),
                                        Permutation::from_cycles(n, {{0, 1}})};
  for (auto _ : state)
    benchmark::DoNotOptimize(group_order(gens));
}
BENCHMARK(BM_OrderSymmetric)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dessin d(Permutation::standard_cycle(n), power(Permutation::standard_cycle(n), 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(automorphism_group(d));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(16)->Arg(64)->Arg(256);

void BM_CertifyTables(benchmark::State &state) {
  const auto rows = load_witness_tables(DFORGE_FIXTURE);
  for (auto _ : state)
    for (const auto &r : rows)
      benchmark::DoNotOptimize(certify(r));
}
BENCHMARK(BM_CertifyTables)->Unit(benchmark::kMillisecond);

} // namespace
