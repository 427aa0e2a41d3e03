#include <benchmark/benchmark.h>

#include <vector>

#include "twuality/multimatroid.hpp"
#include "twuality/orbit.hpp"
#include "twuality/ribbon.hpp"

namespace {

using namespace twuality;

// The delta-matroid of a one-vertex ribbon graph with n pairwise interlaced
// untwisted loops; vf-safe for every n.
RibbonGraph interlaced_bouquet(int n) {
  std::vector<int> rotation;
  for (int k = 1; k <= n; ++k) rotation.push_back(2 * k - 1);
  for (int k = 1; k <= n; ++k) rotation.push_back(2 * k);
  std::vector<RibbonEdge> edges;
  for (int k = 1; k <= n; ++k) edges.push_back({{2 * k - 1, 2 * k}, 1, k});
  return RibbonGraph({rotation}, edges);
}

SetSystem bouquet_dm(int n) { return delta_matroid_of(interlaced_bouquet(n)); }

void BM_OrbitFull(benchmark::State& state) {
  const auto d = bouquet_dm(static_cast<int>(state.range(0)));
  OrbitOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(d, OrbitMode::Full, opts).size());
}
BENCHMARK(BM_OrbitFull)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_OrbitIota(benchmark::State& state) {
  const auto d = bouquet_dm(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(d, OrbitMode::Iota).size());
}
BENCHMARK(BM_OrbitIota)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VfSafe(benchmark::State& state) {
  const auto d = bouquet_dm(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_vf_safe(d));
}
BENCHMARK(BM_VfSafe)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Lift(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = bouquet_dm(n);
  const auto t = TransversalTriple::reference(n);
  const auto s = Projection::identity(n);
  for (auto _ : state) benchmark::DoNotOptimize(lift_unchecked(d, t, s).bases().size());
}
BENCHMARK(BM_Lift)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_StabilizerSearch(benchmark::State& state) {
  const auto d = bouquet_dm(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_search(d, StabilizerMode::All).size());
}
BENCHMARK(BM_StabilizerSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TransitionMatroid(benchmark::State& state) {
  const auto f = medial(interlaced_bouquet(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(transition_matroid(f).bases().size());
}
BENCHMARK(BM_TransitionMatroid)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
