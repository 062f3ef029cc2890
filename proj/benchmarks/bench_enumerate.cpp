#include <benchmark/benchmark.h>

#include "dforge/constructions.hpp"
#include "dforge/dessin.hpp"

using namespace dforge;

namespace {

void BM_Enumerate(benchmark::State &state, const char *passport) {
  const Passport p = Passport::parse(passport);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_dessins(p));
}
BENCHMARK_CAPTURE(BM_Enumerate, six, "[6,3^2,6]");
BENCHMARK_CAPTURE(BM_Enumerate, fermat, "[3^3,3^3,3^3]");
BENCHMARK_CAPTURE(BM_Enumerate, eight, "[2^4,2^4,4^2]");
BENCHMARK_CAPTURE(BM_Enumerate, ten, "[10,5^2,10]")->Unit(benchmark::kMillisecond);

void BM_RegularExists(benchmark::State &state) {
  const Passport p = Passport::parse("[3^4,3^4,3^4]");
  for (auto _ : state)
    benchmark::DoNotOptimize(regular_exists(p));
}
BENCHMARK(BM_RegularExists)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dessin d(Permutation::standard_cycle(n), Permutation::from_cycles(n, {{0, 2, 1}}));
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(32)->Arg(128);

} // namespace
