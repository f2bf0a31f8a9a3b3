// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

// Packaged benchmark_main archives are not portable across compiler
// versions, so the entry point is built here.
BENCHMARK_MAIN();
