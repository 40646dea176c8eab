#include <benchmark/benchmark.h>

#include "magnus/magnus.hpp"

using namespace magnus;

namespace {

void BM_QuotientOrder(benchmark::State& state) {
  const OpenSubgroupSpec spec(static_cast<int>(state.range(0)), 2, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(quotient_order(2, spec));
}
BENCHMARK(BM_QuotientOrder)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_OrderModSubgroup(benchmark::State& state) {
  const OpenSubgroupSpec spec(3, 2, static_cast<int>(state.range(0)));
  const SeriesContext ctx(2, 3, RingTag::integers());
  const Series g = magnus_embed(GroupWord::parse("1 2 -1", 2), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(order_mod_subgroup(g, spec));
}
BENCHMARK(BM_OrderModSubgroup)->DenseRange(1, 4, 1);

}  // namespace
