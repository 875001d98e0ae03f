#include <benchmark/benchmark.h>

#include "dyana/interp.hpp"
#include "dyana/linops.hpp"
#include "dyana/rng.hpp"

namespace {

dyana::Matrix make_matrix(int n) {
  dyana::Rng rng(11);
  dyana::Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = rng.complex_normal();
  return a;
}

void BM_MpNormExact(benchmark::State& state) {
  const auto a = make_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dyana::mp_norm(a, 2.0));
}
BENCHMARK(BM_MpNormExact)->Arg(8)->Arg(32);

void BM_MpNormIterated(benchmark::State& state) {
  const auto a = make_matrix(static_cast<int>(state.range(0)));
  dyana::Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(dyana::mp_norm(a, 1.5, 4, &rng));
}
BENCHMARK(BM_MpNormIterated)->Arg(8)->Arg(32);

void BM_OperatorNormAscent(benchmark::State& state) {
  const auto a = make_matrix(static_cast<int>(state.range(0)));
  dyana::Rng rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(dyana::operator_norm(a, 1.5, 3.0, 2, &rng));
}
BENCHMARK(BM_OperatorNormAscent)->Arg(4)->Arg(8);

}  // namespace
