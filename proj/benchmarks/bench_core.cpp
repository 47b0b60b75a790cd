#include <benchmark/benchmark.h>

#include "ccuf/deployment.hpp"
#include "ccuf/placement.hpp"
#include "ccuf/popularity.hpp"
#include "ccuf/simulation.hpp"

using namespace ccuf;

static void BM_ZipfProfile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ZipfProfile(static_cast<int>(state.range(0)), 0.8));
}
BENCHMARK(BM_ZipfProfile)->Arg(500)->Arg(40724);

static void BM_FapPlacement(benchmark::State& state) {
  const ZipfProfile z(static_cast<int>(state.range(0)), 0.8);
  const auto p = z.probabilities();
  const std::vector<double> w(p.begin(), p.end());
  for (auto _ : state) benchmark::DoNotOptimize(solve_fap_placement(w, 0.3, 40, 7));
}
BENCHMARK(BM_FapPlacement)->Arg(500)->Arg(40724);

static void BM_DemandSample(benchmark::State& state) {
  const ZipfProfile z(40724, 0.8);
  const UserDemand d(z.probabilities(), 1);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(d.sample(0, rng));
}
BENCHMARK(BM_DemandSample);

static void BM_KMeans(benchmark::State& state) {
  Rng rng(2);
  std::vector<Vec2> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({500 * uniform01(rng) - 250, 500 * uniform01(rng) - 250});
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_deploy(pts, 3, 250, rng));
}
BENCHMARK(BM_KMeans)->Arg(100)->Arg(1000);

static void BM_Replication(benchmark::State& state) {
  SimConfig c = default_config("desk");
  c.horizon_slots = static_cast<int>(state.range(0));
  int rep = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_replication(c, rep++));
}
BENCHMARK(BM_Replication)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
