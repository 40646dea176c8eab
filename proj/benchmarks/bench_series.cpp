#include <benchmark/benchmark.h>

#include "magnus/magnus.hpp"

using namespace magnus;

namespace {

Series dense_group_element(const SeriesContext& ctx) {
  GroupWord w(ctx.n);
  for (int i = 0; i < 6; ++i) w.append(1 + i % ctx.n, i % 3 == 2 ? -1 : 1);
  return magnus_embed(w, ctx);
}

void BM_Multiply(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::rationals());
  const Series g = dense_group_element(ctx);
  const Series h = inverse(g) * g * g;
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
  state.counters["terms"] = static_cast<double>(g.size());
}
BENCHMARK(BM_Multiply)->DenseRange(4, 8, 2);

void BM_Log(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::rationals());
  const Series g = dense_group_element(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ln(g));
}
BENCHMARK(BM_Log)->DenseRange(4, 8, 2);

void BM_PAdicMultiply(benchmark::State& state) {
  const SeriesContext ctx(2, 6, RingTag::padics(2, static_cast<int>(state.range(0))));
  const Series g = dense_group_element(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(g * g);
}
BENCHMARK(BM_PAdicMultiply)->Arg(16)->Arg(64);

void BM_GrouplikeCheck(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::integers());
  const Series g = dense_group_element(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(is_grouplike(g, CoproductKind::Twisted));
}
BENCHMARK(BM_GrouplikeCheck)->DenseRange(4, 7, 1);

}  // namespace
