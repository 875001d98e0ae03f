#include <benchmark/benchmark.h>

#include "dyana/dyadic.hpp"
#include "dyana/hardy.hpp"
#include "dyana/rng.hpp"

namespace {

dyana::DyadicStepFn make_fn(int m) {
  dyana::Rng rng(7);
  std::vector<dyana::cd> vals(std::size_t{1} << m);
  for (auto& v : vals) v = rng.normal();
  return dyana::DyadicStepFn(m, std::move(vals));
}

void BM_HaarRoundTrip(benchmark::State& state) {
  const auto f = make_fn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto e = dyana::haar_analyze(f);
    benchmark::DoNotOptimize(dyana::haar_synthesize(e, f.resolution()));
  }
}
BENCHMARK(BM_HaarRoundTrip)->Arg(6)->Arg(10)->Arg(14);

void BM_MaximalFunction(benchmark::State& state) {
  const auto f = make_fn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dyana::maximal(f));
}
BENCHMARK(BM_MaximalFunction)->Arg(6)->Arg(10);

void BM_SquareFunction(benchmark::State& state) {
  const auto f = make_fn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dyana::square(f));
}
BENCHMARK(BM_SquareFunction)->Arg(6)->Arg(10);

void BM_StoppingTime(benchmark::State& state) {
  const auto f = make_fn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dyana::cz_flatten_m(f, 0.5));
}
BENCHMARK(BM_StoppingTime)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
