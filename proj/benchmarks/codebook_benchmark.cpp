// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lfb/channel.hpp"
#include "lfb/rng.hpp"
#include "lfb/rvq.hpp"

namespace {

// Exhaustive search over 2^B codewords; args are (n_t, bits, n_r).
void BM_SelectBeamformer(benchmark::State& state) {
  const int n_t = static_cast<int>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  const int n_r = static_cast<int>(state.range(2));
  const auto cb = lfb::generate_codebook(n_t, bits, std::uint64_t{1});
  auto stream = lfb::make_stream(1, lfb::StreamPurpose::kChannel, 0);
  const lfb::CMatrix h = lfb::sample_gaussian(n_r, n_t, 1.0, stream);
  for (auto _ : state) benchmark::DoNotOptimize(lfb::select_beamformer(h, cb));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cb.size()));
}
BENCHMARK(BM_SelectBeamformer)
    ->Args({4, 4, 1})
    ->Args({6, 6, 1})
    ->Args({10, 10, 1})
    ->Args({3, 3, 6})
    ->Args({9, 4, 18});

void BM_GenerateCodebook(benchmark::State& state) {
  const int n_t = static_cast<int>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lfb::generate_codebook(n_t, bits, ++seed));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << bits));
}
BENCHMARK(BM_GenerateCodebook)->Args({4, 4})->Args({10, 10});

}  // namespace
