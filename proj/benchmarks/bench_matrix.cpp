#include <benchmark/benchmark.h>

#include "expmat/families.hpp"
#include "expmat/matrix.hpp"

using namespace expmat;

namespace {

void BM_VerifyExponential(benchmark::State& state) {
  auto q = FieldCtx::rationals();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ScalarMatrix nil = ScalarMatrix::zero(q, n);
  for (std::size_t i = 0; i + 1 < n; ++i) nil.set(i, i + 1, Scalar::one(q));
  PolyMatrix m = exp_nilpotent(nil).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(ExpMatrix::verify(m));
}
BENCHMARK(BM_VerifyExponential)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_ExpLogRoundTrip(benchmark::State& state) {
  auto q = FieldCtx::rationals();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ScalarMatrix nil = ScalarMatrix::zero(q, n);
  for (std::size_t i = 0; i + 1 < n; ++i) nil.set(i, i + 1, Scalar::one(q));
  for (auto _ : state) benchmark::DoNotOptimize(log_exponential(exp_nilpotent(nil)));
}
BENCHMARK(BM_ExpLogRoundTrip)->Arg(3)->Arg(5);

void BM_Jordan(benchmark::State& state) {
  auto q = FieldCtx::rationals();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ScalarMatrix nil = ScalarMatrix::zero(q, n);
  for (std::size_t i = 0; i + 1 < n; ++i) nil.set(i, i + 1, Scalar::one(q));
  ScalarMatrix p = ScalarMatrix::identity(q, n);
  p.set(0, n - 1, Scalar::of_int(q, 3));
  ScalarMatrix m = p * nil * p.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_jordan(m));
}
BENCHMARK(BM_Jordan)->Arg(3)->Arg(4)->Arg(5);

}  // namespace
