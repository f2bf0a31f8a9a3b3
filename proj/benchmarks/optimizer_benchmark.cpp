// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lfb/optimizer.hpp"

namespace {

const double kRho = lfb::snr_from_db(5.0);

void BM_OptimizeMiso(benchmark::State& state) {
  const lfb::SystemConfig cfg{static_cast<int>(state.range(0)), 1, kRho, 100.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lfb::optimize_allocation(cfg, lfb::ChannelKind::kMiso, lfb::BoundKind::kLower));
  }
}
BENCHMARK(BM_OptimizeMiso)->Arg(6)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_OptimizeMimo(benchmark::State& state) {
  const lfb::SystemConfig cfg{9, 18, kRho, 10.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lfb::optimize_allocation(cfg, lfb::ChannelKind::kMimo, lfb::BoundKind::kLower));
  }
}
BENCHMARK(BM_OptimizeMimo)->Unit(benchmark::kMillisecond);

void BM_SweepOverhead(benchmark::State& state) {
  const lfb::RateObjective obj{lfb::SystemConfig{6, 1, kRho, 100.0, 1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(lfb::sweep_overhead(obj, 1.0, 101));
}
BENCHMARK(BM_SweepOverhead);

}  // namespace
