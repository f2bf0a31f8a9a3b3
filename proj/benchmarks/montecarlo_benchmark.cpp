// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lfb/montecarlo.hpp"

namespace {

// Trials per second for the MISO rate pair; args are (n_t, workers).
void BM_SimulateRates(benchmark::State& state) {
  const int n_t = static_cast<int>(state.range(0));
  const lfb::SystemConfig cfg{n_t, 1, lfb::snr_from_db(5.0), 10.0, 1.0};
  lfb::SimulationSpec spec;
  spec.trials = 1024;
  spec.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lfb::simulate_rates(cfg, 0.15, n_t, spec));
    ++spec.seed;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.trials));
}
BENCHMARK(BM_SimulateRates)->Args({4, 1})->Args({8, 1})->Args({8, 0})->Unit(benchmark::kMillisecond);

void BM_ValidateMse(benchmark::State& state) {
  lfb::SimulationSpec spec;
  spec.trials = 4096;
  spec.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(lfb::validate_mse(4, 8, 1.0, spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.trials));
}
BENCHMARK(BM_ValidateMse)->Unit(benchmark::kMillisecond);

}  // namespace
