#include <benchmark/benchmark.h>

#include "gtshift/canonical.hpp"
#include "gtshift/enumerate.hpp"
#include "gtshift/metrics.hpp"
#include "gtshift/spectral.hpp"
#include "gtshift/verify.hpp"

namespace {

using namespace gtshift;

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Tree& t : trees) benchmark::DoNotOptimize(canonical_code(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(trees.size()));
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(10)->Arg(12);

DistMatrix complement_of_path(int n) {
  return from_distances(complement_distances(Tree::path(n)), DistanceKind{});
}

void BM_SpectralRadius(benchmark::State& state) {
  const DistMatrix d = complement_of_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(d));
}
BENCHMARK(BM_SpectralRadius)->Arg(6)->Arg(10)->Arg(12);

void BM_EigOracle(benchmark::State& state) {
  const DistMatrix d = complement_of_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_oracle(d));
}
BENCHMARK(BM_EigOracle)->Arg(6)->Arg(10)->Arg(12);

void BM_GtsCampaign(benchmark::State& state) {
  verify::CampaignOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::check_gts_monotonicity(static_cast<int>(state.range(0)), opts));
  }
}
BENCHMARK(BM_GtsCampaign)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
