#include <benchmark/benchmark.h>

#include "rsdist/aj.hpp"
#include "rsdist/counting.hpp"
#include "rsdist/distance.hpp"
#include "rsdist/field.hpp"

namespace {

using namespace rsdist;

void BM_FieldMul(benchmark::State& state) {
  const Field F = Field::from_order(static_cast<std::uint64_t>(state.range(0)));
  Elem x = 1;
  for (auto _ : state) {
    x = F.mul(x, 3);
    x = F.add(x, 1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(256)->Arg(1024);

void BM_WjTable(benchmark::State& state) {
  const Field F = Field::from_order(static_cast<std::uint64_t>(state.range(0)));
  const EvalSet D = EvalSet::full(F);
  for (auto _ : state) {
    auto t = wj_table(F, 2, 2, 4, D);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_WjTable)->Arg(9)->Arg(25)->Arg(49);

void BM_AjSeries(benchmark::State& state) {
  // u = q = 64, w = gamma = 2/8 = 1/4: both exact rationals.
  const AjParams base = AjParams::for_field(64, 3, 0);
  const auto j = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto v = aj_series_all(j, base.p, base.u.rational(), base.w.rational());
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_AjSeries)->Arg(16)->Arg(64);

void BM_AjBinsum(benchmark::State& state) {
  const AjParams base = AjParams::for_field(64, 3, 0);
  const auto j = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto v = aj_binsum(j, base.p, base.u.rational(), base.w.rational());
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_AjBinsum)->Arg(16)->Arg(64);

void BM_Distance(benchmark::State& state) {
  const Field F = Field::from_order(static_cast<std::uint64_t>(state.range(0)));
  const EvalSet D = EvalSet::full(F);
  std::vector<Elem> word(F.q());
  for (Elem i = 0; i < F.q(); ++i) word[i] = F.mul(i, F.mul(i, i));
  const std::uint32_t k = 3;  // scan-scale dimension: q^k codewords
  for (auto _ : state) {
    auto d = rs_distance(F, word, k, D);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Distance)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
