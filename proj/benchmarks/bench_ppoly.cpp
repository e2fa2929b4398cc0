#include <benchmark/benchmark.h>

#include "expmat/ppoly.hpp"

using namespace expmat;

namespace {

PPoly dense_ppoly(const FieldCtxPtr& ctx, std::size_t max_index) {
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i <= max_index; ++i)
    coeffs.push_back(Scalar::of_int(ctx, 1 + static_cast<long long>(i % (ctx->characteristic() - 1 + 1))));
  return PPoly::from_coeffs(ctx, std::move(coeffs));
}

void BM_OreCompose(benchmark::State& state) {
  auto f9 = FieldCtx::finite(3, 2);
  PPoly a = dense_ppoly(f9, static_cast<std::size_t>(state.range(0)));
  PPoly b = dense_ppoly(f9, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a.compose(b));
}
BENCHMARK(BM_OreCompose)->Arg(2)->Arg(4)->Arg(8);

void BM_ReduceLoop(benchmark::State& state) {
  auto f3 = FieldCtx::finite(3);
  PPoly a1 = dense_ppoly(f3, 2);
  PPoly a2 = dense_ppoly(f3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_loop(a1, a2));
}
BENCHMARK(BM_ReduceLoop)->Arg(3)->Arg(5)->Arg(7);

void BM_SpanCanonical(benchmark::State& state) {
  auto f2 = FieldCtx::finite(2);
  PPoly a = dense_ppoly(f2, static_cast<std::size_t>(state.range(0)));
  PPoly b = dense_ppoly(f2, static_cast<std::size_t>(state.range(0) / 2));
  std::vector<PPoly> tuple = {a, b};
  for (auto _ : state) benchmark::DoNotOptimize(span_canonical(tuple));
}
BENCHMARK(BM_SpanCanonical)->Arg(4)->Arg(8);

}  // namespace
