#include <benchmark/benchmark.h>

#include "expmat/classify.hpp"

using namespace expmat;

namespace {

void BM_Classify3x3(benchmark::State& state) {
  auto f3 = FieldCtx::finite(3);
  std::vector<Scalar> c1 = {Scalar::of_int(f3, 1), Scalar::of_int(f3, 2)};
  std::vector<Scalar> c2 = {Scalar::of_int(f3, 2), Scalar::of_int(f3, 0),
                            Scalar::of_int(f3, 1)};
  ExpMatrix a = make_a21(PPoly::from_coeffs(f3, c1), PPoly::from_coeffs(f3, c2));
  ClassifyOptions opts;
  opts.verify_witness = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_3x3(a, opts));
}
BENCHMARK(BM_Classify3x3)->Arg(0)->Arg(1);

void BM_ClassifyChar0(benchmark::State& state) {
  auto q = FieldCtx::rationals();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ScalarMatrix nil = ScalarMatrix::zero(q, n);
  for (std::size_t i = 0; i + 1 < n; ++i) nil.set(i, i + 1, Scalar::one(q));
  ExpMatrix a = exp_nilpotent(nil);
  for (auto _ : state) benchmark::DoNotOptimize(classify_char0(a));
}
BENCHMARK(BM_ClassifyChar0)->Arg(2)->Arg(3)->Arg(4);

void BM_EquivBir(benchmark::State& state) {
  auto f2 = FieldCtx::finite(2);
  std::vector<Scalar> c1 = {Scalar::one(f2), Scalar::one(f2)};
  std::vector<Scalar> c2 = {Scalar::zero(f2), Scalar::zero(f2), Scalar::one(f2)};
  ExpMatrix a = make_a21(PPoly::identity(f2), PPoly::from_coeffs(f2, c2));
  ExpMatrix b = make_a21(PPoly::from_coeffs(f2, c1), PPoly::from_coeffs(f2, c2));
  for (auto _ : state) benchmark::DoNotOptimize(equiv_bir(a, b, {.verify_witness = false}));
}
BENCHMARK(BM_EquivBir);

}  // namespace
