#include <benchmark/benchmark.h>

#include <random>

#include "arifs/arifs.hpp"
#include "oracles.hpp"

using namespace arifs;

namespace {

CategoricalDataset random_rows(std::size_t m, std::size_t n, std::size_t range) {
  std::mt19937_64 rng(m * 31 + n);
  return oracle::random_dataset(rng, m, n, range, 2);
}

void BM_DifCountsHashed(benchmark::State& state) {
  const auto ds = random_rows(static_cast<std::size_t>(state.range(0)), 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dif_counts(ds, FeatureId{0}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DifCountsHashed)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_DifNaive(benchmark::State& state) {
  const auto ds = random_rows(static_cast<std::size_t>(state.range(0)), 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::naive_dif(ds, 0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DifNaive)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_AriAllCube(benchmark::State& state) {
  const auto ds = generate(SyntheticSpec{SyntheticFunction::g1, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(ari_all(ds));
}
BENCHMARK(BM_AriAllCube)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_AriAllTernarySample(benchmark::State& state) {
  const auto ds = generate(SyntheticSpec{SyntheticFunction::g1, 15, 3,
                                         UniformSample{static_cast<std::size_t>(state.range(0)), 1}});
  for (auto _ : state) benchmark::DoNotOptimize(ari_all(ds));
}
BENCHMARK(BM_AriAllTernarySample)->Arg(400)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Relief(benchmark::State& state) {
  const auto ds = subsample(generate(SyntheticSpec{SyntheticFunction::g2}),
                            static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(relief_scores(ds, 10));
}
BENCHMARK(BM_Relief)->Arg(128)->Arg(341)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
