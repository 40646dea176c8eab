#include <benchmark/benchmark.h>

#include "magnus/magnus.hpp"

using namespace magnus;

namespace {

Series sample(const SeriesContext& ctx) {
  return magnus_embed(GroupWord::parse("1 2 -1 1 1 -2 2 1", ctx.n), ctx);
}

void BM_Decompose(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::integers());
  const Series g = sample(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(malcev_decompose(g, LyndonOrder::graded(), false));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Compose(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::integers());
  const MalcevCoordinates t = malcev_decompose(sample(ctx), LyndonOrder::graded(), false);
  for (auto _ : state) benchmark::DoNotOptimize(malcev_compose(t, ctx));
}
BENCHMARK(BM_Compose)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const SeriesContext ctx(2, static_cast<int>(state.range(0)), RingTag::integers());
  const auto a = lyndon_coefficients(sample(ctx));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_lyndon_coeffs(a, LyndonOrder::graded(), ctx));
}
BENCHMARK(BM_Reconstruct)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_LieDecompose(benchmark::State& state) {
  const SeriesContext ctx(3, static_cast<int>(state.range(0)), RingTag::rationals());
  Series z(ctx);
  long k = 1;
  for (const Word& L : lyndon_words(ctx.n, ctx.max_degree)) z += ctx.integer(k++ % 7 - 3) * xi(L, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_lie_unchecked(z));
}
BENCHMARK(BM_LieDecompose)->DenseRange(3, 5, 1);

}  // namespace
