#include <benchmark/benchmark.h>

#include "cwb/celltheory.hpp"
#include "cwb/glrep.hpp"
#include "cwb/hwv.hpp"

using namespace cwb;

namespace {
GroundConfig config_a() { return {2, {3, 3}, {frac(0, 1), frac(1, 2)}}; }
GroundConfig config_c() { return {3, {2, 2, 2}, {frac(0, 1), frac(1, 3), frac(2, 3)}}; }
}  // namespace

static void BM_DiagramCompose(benchmark::State& state) {
  auto all = all_walled_diagrams(3, 3);
  for (auto _ : state)
    for (std::size_t i = 0; i + 1 < all.size(); i += 7) benchmark::DoNotOptimize(compose(all[i], all[i + 1]));
}
BENCHMARK(BM_DiagramCompose);

static void BM_VermaRank(benchmark::State& state) {
  int r = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(VermaOracle(config_a(), r, t).rank());
}
BENCHMARK(BM_VermaRank)->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_StructureConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(structure_algebra(config_a(), 2, 1)->dim());
}
BENCHMARK(BM_StructureConstants)->Unit(benchmark::kMillisecond);

static void BM_Extrapolation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(structure_algebra(config_c(), 2, 1)->dim());
}
BENCHMARK(BM_Extrapolation)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_Decomposition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_matrix(config_a(), 2, 1).is_identity());
}
BENCHMARK(BM_Decomposition)->Unit(benchmark::kMillisecond);

static void BM_HighestWeightClassification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_hwv(config_a(), 2, 1).ok());
}
BENCHMARK(BM_HighestWeightClassification)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
