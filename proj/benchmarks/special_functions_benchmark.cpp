// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lfb/numerics.hpp"
#include "lfb/rvq.hpp"

namespace {

void BM_LogGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lfb::log_gamma(x));
    x = x < 1e6 ? x * 1.37 : 0.5;
  }
}
BENCHMARK(BM_LogGamma);

void BM_LogBetaLargeN(benchmark::State& state) {
  const double n = std::ldexp(1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lfb::log_beta(n, 1.25));
}
BENCHMARK(BM_LogBetaLargeN)->Arg(8)->Arg(64)->Arg(256);

void BM_LambertWm1(benchmark::State& state) {
  double x = -0.3678;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lfb::lambert_w_m1(x));
    x = x < -1e-6 ? x * 0.9 : -0.3678;
  }
}
BENCHMARK(BM_LambertWm1);

void BM_DFactor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lfb::d_factor(6, 0.75));
}
BENCHMARK(BM_DFactor);

}  // namespace
