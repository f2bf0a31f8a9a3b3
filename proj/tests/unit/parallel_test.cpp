// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lfb/parallel.hpp"

using namespace lfb;

namespace {

std::array<double, 2> kernel_value(std::uint64_t i) {
  const double x = std::sin(static_cast<double>(i) * 0.37) * 10.0 + 1e6;
  return {x, x * x * 1e-6};
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("moments agree with a two-pass computation") {
    constexpr std::uint64_t n = 5000;
    const auto acc = run_trials<2>(n, 1, [] { return kernel_value; });
    double mean = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) mean += kernel_value(i)[0];
    mean /= n;
    double ss = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) ss += std::pow(kernel_value(i)[0] - mean, 2);
    CHECK(acc.count() == n);
    CHECK(acc.mean(0) == doctest::Approx(mean).epsilon(1e-14));
    CHECK(acc.variance(0) == doctest::Approx(ss / (n - 1)).epsilon(1e-9));
    CHECK(acc.sample_mean(0).std_err ==
          doctest::Approx(std::sqrt(ss / (n - 1) / n)).epsilon(1e-9));
  }

  TEST_CASE("merge equals sequential accumulation") {
    MomentAccumulator<1> all;
    MomentAccumulator<1> left;
    MomentAccumulator<1> right;
    for (int i = 0; i < 1000; ++i) {
      const std::array<double, 1> x{std::cos(i * 1.3)};
      all.add(x);
      (i < 321 ? left : right).add(x);
    }
    left.merge(right);
    CHECK(left.count() == all.count());
    CHECK(left.mean(0) == doctest::Approx(all.mean(0)).epsilon(1e-13));
    CHECK(left.variance(0) == doctest::Approx(all.variance(0)).epsilon(1e-12));
    MomentAccumulator<1> empty;
    empty.merge(all);
    CHECK(empty.mean(0) == all.mean(0));
  }

  TEST_CASE("results are bit-identical for any worker count") {
    for (std::uint64_t n : {1ULL, 255ULL, 256ULL, 257ULL, 10000ULL}) {
      const auto ref = run_trials<2>(n, 1, [] { return kernel_value; });
      for (unsigned w : {2u, 3u, 8u, 0u}) {
        const auto got = run_trials<2>(n, w, [] { return kernel_value; });
        CAPTURE(n);
        CAPTURE(w);
        CHECK(same_bits(got.mean(0), ref.mean(0)));
        CHECK(same_bits(got.variance(1), ref.variance(1)));
      }
    }
  }

  TEST_CASE("kernel exceptions propagate") {
    auto throwing = [] {
      return [](std::uint64_t i) -> std::array<double, 1> {
        if (i == 700) throw std::runtime_error("boom");
        return {1.0};
      };
    };
    CHECK_THROWS_AS(run_trials<1>(1000, 4, throwing), std::runtime_error);
    CHECK_THROWS_AS(run_trials<1>(1000, 1, throwing), std::runtime_error);
  }
}
