// Serial reference vs OpenMP kernels on congruence images of UT(3, Z).

#include <benchmark/benchmark.h>

#include "nilsep/group_presets.hpp"
#include "nilsep/kernels.hpp"
#include "nilsep/product_group.hpp"

namespace {

using namespace nilsep;

const FiniteGroup& image(unsigned level) {
  static std::vector<FiniteGroup> cache;
  while (cache.size() < level)
    cache.push_back(congruence_hom(presets::heisenberg(), 2, static_cast<unsigned>(cache.size() + 1)).codomain);
  return cache[level - 1];
}

template <class Fn>
void table(benchmark::State& state, Fn fn) {
  const FiniteGroup& g = image(static_cast<unsigned>(state.range(0)));
  const kernels::MulFn mul = [&](Index x, Index y) { return g.mul(x, y); };
  for (auto _ : state) benchmark::DoNotOptimize(fn(g.order(), mul));
  state.SetItemsProcessed(state.iterations() * g.order() * g.order());
}

template <class Fn>
void labels(benchmark::State& state, Fn fn) {
  const FiniteGroup& g = image(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fn(g));
  state.SetItemsProcessed(state.iterations() * g.order());
}

void BM_CayleySerial(benchmark::State& s) { table(s, kernels::serial::cayley_table); }
void BM_CayleyParallel(benchmark::State& s) { table(s, kernels::parallel::cayley_table); }
void BM_ClassesSerial(benchmark::State& s) { labels(s, kernels::serial::class_labels); }
void BM_ClassesParallel(benchmark::State& s) { labels(s, kernels::parallel::class_labels); }

}  // namespace

BENCHMARK(BM_CayleySerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassesSerial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassesParallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
