#include "tropdeg/exact_linalg.hpp"
#include "tropdeg/linear_space.hpp"
#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/stable_intersection.hpp"
#include "tropdeg/type_a.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropdeg;

static void BM_Degree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto surface = tropical_root_surface(n);
  DegreeOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(degree(surface.fan, opts));
  state.counters["facet_pairs"] =
      static_cast<double>(surface.fan.facets().size() * standard_tropical_linear_space(n, 2).fan.facets().size());
}
BENCHMARK(BM_Degree)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_BalanceRootSurface(benchmark::State& state) {
  const auto fan = tropical_root_surface(static_cast<std::size_t>(state.range(0))).fan;
  for (auto _ : state) benchmark::DoNotOptimize(is_tropical_fan(fan, 1));
}
BENCHMARK(BM_BalanceRootSurface)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BalanceLinearSpace(benchmark::State& state) {
  const auto fan = standard_tropical_linear_space(static_cast<std::size_t>(state.range(0)), 2).fan;
  for (auto _ : state) benchmark::DoNotOptimize(is_tropical_fan(fan, 1));
}
BENCHMARK(BM_BalanceLinearSpace)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_EdgeOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_oracle(n));
}
BENCHMARK(BM_EdgeOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 16);

static void BM_FacetPair(benchmark::State& state) {
  const auto s = tropical_root_surface(7);
  const auto l = standard_tropical_linear_space(7, 2);
  const auto v = super_increasing_vector(7);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& f = s.fan.facets()[k % s.fan.facets().size()];
    const auto& g = l.fan.facets()[(k / 7) % l.fan.facets().size()];
    benchmark::DoNotOptimize(intersect_facet_pair(f, 1, v, g, 1));
    ++k;
  }
}
BENCHMARK(BM_FacetPair);

BENCHMARK_MAIN();
