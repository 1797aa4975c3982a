#include <benchmark/benchmark.h>

#include <random>

#include "pfg/bijections.hpp"
#include "pfg/check.hpp"
#include "pfg/enumerate.hpp"
#include "pfg/families.hpp"

namespace {

using namespace pfg;

Digraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return Digraph(n, edges);
}

void BM_IsParkingFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Digraph d = random_graph(n, 2.0 / n, rng);
  std::vector<PreferenceSequence> seqs(256, PreferenceSequence(n));
  for (auto& s : seqs) {
    for (auto& v : s) v = 1 + static_cast<int>(rng() % n);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_parking_function(d, seqs[i++ % seqs.size()]));
}
BENCHMARK(BM_IsParkingFunction)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ParkingSchedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = path_digraph(n);
  const PreferenceSequence s(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(parking_schedule(d, s));
}
BENCHMARK(BM_ParkingSchedule)->Arg(8)->Arg(32);

void BM_Filters(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = star_tree(n, Orientation::source).as_digraph();
  for (auto _ : state) benchmark::DoNotOptimize(d.filters());
}
BENCHMARK(BM_Filters)->Arg(8)->Arg(14);

void BM_CountPfPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = path_digraph(n);
  for (auto _ : state) benchmark::DoNotOptimize(count_pf(d, n));
}
BENCHMARK(BM_CountPfPath)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_FamilySumInverseMappings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(family_sums(Family::inverse_mappings, n, workers));
}
BENCHMARK(BM_FamilySumInverseMappings)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({5, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_TauSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_tau_roundtrip(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_TauSweep)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PsiSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_psi_roundtrip(n, n, 1));
}
BENCHMARK(BM_PsiSweep)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
