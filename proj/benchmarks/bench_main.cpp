#include <benchmark/benchmark.h>

#include "g2tok/characters.hpp"
#include "g2tok/gindikin_karpelevic.hpp"
#include "g2tok/littelmann_g2.hpp"
#include "g2tok/root_datum.hpp"

using namespace g2tok;

namespace {

void BM_EnumerateCrystal(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_crystal({l, l}));
}
BENCHMARK(BM_EnumerateCrystal)->Arg(1)->Arg(3)->Arg(5)->Arg(7);

void BM_ConjectureSum(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_sum({l, l}));
}
BENCHMARK(BM_ConjectureSum)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_ShiftedCharacter(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RootDatum& g2 = build_g2_datum();
  for (auto _ : state) benchmark::DoNotOptimize(shifted_character(g2, {l, l}));
}
BENCHMARK(BM_ShiftedCharacter)->Arg(2)->Arg(4)->Arg(6);

void BM_DeformedDenominatorMul(benchmark::State& state) {
  const LaurentPoly d = deformed_denominator(build_g2_datum());
  const LaurentPoly chi = shifted_character(build_g2_datum(), {3, 3}).poly;
  for (auto _ : state) benchmark::DoNotOptimize(chi * d);
}
BENCHMARK(BM_DeformedDenominatorMul);

void BM_GkPatternSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk_pattern_series(n));
}
BENCHMARK(BM_GkPatternSeries)->Arg(8)->Arg(12)->Arg(16);

void BM_BijectionRoundTrip(benchmark::State& state) {
  const auto patterns = enumerate_circling_patterns(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const G2Pattern& pi : patterns)
      benchmark::DoNotOptimize(partition_to_pattern(pattern_to_partition(pi)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(patterns.size()));
}
BENCHMARK(BM_BijectionRoundTrip)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
