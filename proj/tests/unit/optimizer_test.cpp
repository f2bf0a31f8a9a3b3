// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "lfb/error.hpp"
#include "lfb/numerics.hpp"
#include "lfb/optimizer.hpp"
#include "lfb/rvq.hpp"

using namespace lfb;

namespace {

const double kRho = snr_from_db(5.0);

RateObjective fig3_objective() {
  return {SystemConfig{6, 1, kRho, 100.0, 1.0}, ChannelKind::kMiso, BoundKind::kLower, 0.0};
}

RateObjective fig6_objective() {
  return {SystemConfig{9, 18, kRho, 10.0, 1.0}, ChannelKind::kMimo, BoundKind::kLower, 0.0};
}

}  // namespace

TEST_SUITE("optimizer") {
  TEST_CASE("objective is the data-scaled bound") {
    const auto obj = fig3_objective();
    const double per = miso_capacity_bounds(obj.config, 5.0, 4.0).lower;
    CHECK(obj(5.0, 4.0) == doctest::Approx(per * 91.0 / 100.0).epsilon(1e-15));
    CHECK(obj(60.0, 40.0) == 0.0);
    CHECK(obj(70.0, 40.0) == 0.0);
    CHECK(obj.b_bar_cap() == 100.0);
    CHECK(fig6_objective().b_bar_cap() == doctest::Approx(b_star(2.0)));
  }

  TEST_CASE("lower-bound optimum is interior") {
    for (int n_t : {2, 4, 10, 50}) {
      for (double l : {5.0, 20.0, 100.0}) {
        const RateObjective obj{SystemConfig{n_t, 1, kRho, l, 1.0}, ChannelKind::kMiso,
                                BoundKind::kLower, 0.0};
        const auto r = optimize_allocation(obj);
        CAPTURE(n_t);
        CAPTURE(l);
        CHECK(r.allocation.t_bar > 0.0);
        CHECK(r.allocation.b_bar > 0.0);
        CHECK(r.allocation.d_bar > 0.0);
        CHECK(r.allocation.satisfies_constraint(l, 1.0));
        CHECK(r.tolerance_met);
        CHECK_FALSE(r.degenerate);
        CHECK(r.rate.value >= r.grid_best);
      }
    }
  }

  TEST_CASE("optimum dominates the grid and random feasible points") {
    for (const RateObjective& obj : {fig3_objective(), fig6_objective(),
                                     RateObjective{SystemConfig{4, 1, kRho, 30.0, 2.0},
                                                   ChannelKind::kMiso, BoundKind::kUpper, 0.0}}) {
      const auto r = optimize_allocation(obj);
      const double l = obj.config.l_bar;
      const double mu = obj.config.mu;
      const double cap = obj.b_bar_cap();
      for (int i = 0; i <= 200; ++i) {
        for (int j = 0; j <= 200; ++j) {
          const double t = l * i / 200.0;
          const double b = cap * j / 200.0;
          if (t + mu * b > l) continue;
          REQUIRE(obj(t, b) <= r.rate.value);
        }
      }
      std::mt19937_64 gen(12345);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int k = 0; k < 1000; ++k) {
        const double t = l * u(gen);
        const double b = std::min(cap, (l - t) / mu) * u(gen);
        REQUIRE(obj(t, b) <= r.rate.value);
      }
    }
  }

  TEST_CASE("optimizer is deterministic") {
    const auto a = optimize_allocation(fig3_objective());
    const auto b = optimize_allocation(fig3_objective());
    CHECK(a.allocation.t_bar == b.allocation.t_bar);
    CHECK(a.allocation.b_bar == b.allocation.b_bar);
    CHECK(a.rate.value == b.rate.value);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("six-antenna MISO optimum sits near ten percent overhead") {
    const auto r = optimize_allocation(fig3_objective());
    const double frac = r.allocation.overhead_fraction(100.0, 1.0);
    CHECK(frac > 0.07);
    CHECK(frac < 0.13);
  }

  TEST_CASE("MIMO optimum respects and flags the feedback cap") {
    const auto r = optimize_allocation(fig6_objective());
    CHECK(r.allocation.b_bar <= b_star(2.0));
    CHECK(r.at_feedback_cap);
    const auto upper = optimize_allocation(SystemConfig{9, 18, kRho, 10.0, 1.0},
                                           ChannelKind::kMimo, BoundKind::kUpper);
    CHECK(upper.allocation.b_bar <= b_star(2.0));
  }

  TEST_CASE("zero objective returns the boundary point with a flag") {
    // At snr = 1e-300 the estimate carries no power and every bound is zero.
    const RateObjective obj{SystemConfig{4, 8, 1e-300, 1.0, 1.0}, ChannelKind::kMimo,
                            BoundKind::kLower, 0.0};
    const auto r = optimize_allocation(obj);
    CHECK(r.degenerate);
    CHECK(r.allocation.d_bar == 1.0);
    CHECK(r.rate.value == 0.0);
  }

  TEST_CASE("invalid configurations are rejected") {
    RateObjective obj = fig3_objective();
    obj.config.l_bar = 0.0;
    CHECK_THROWS_AS(optimize_allocation(obj), DomainError);
    obj = fig3_objective();
    obj.config.n_t = 1;
    CHECK_THROWS_AS(optimize_allocation(obj), DomainError);
  }

  TEST_CASE("sweep endpoints and ray geometry") {
    const auto pts = sweep_overhead(fig3_objective(), 1.0, 101);
    REQUIRE(pts.size() == 101);
    CHECK(pts.front().rate == 0.0);
    CHECK(pts.back().rate == 0.0);
    for (const auto& p : pts) {
      CHECK(p.t_bar == doctest::Approx(p.b_bar));
      CHECK(p.t_bar + p.b_bar == doctest::Approx(100.0 * p.overhead_fraction));
    }
    CHECK(pts[1].rate > 0.0);
    CHECK_THROWS_AS(sweep_overhead(fig3_objective(), 0.0, 10), DomainError);
    CHECK_THROWS_AS(sweep_overhead(fig3_objective(), 1.0, 1), DomainError);
  }

  TEST_CASE("equal-split sweep peak is close to the optimum") {
    const auto r = optimize_allocation(fig3_objective());
    const auto pts = sweep_overhead(fig3_objective(), 1.0, 1001);
    double peak = 0.0;
    for (const auto& p : pts) peak = std::max(peak, p.rate);
    CHECK(peak <= r.rate.value);
    CHECK(peak >= 0.98 * r.rate.value);
  }

  TEST_CASE("sweep at the optimal ratio attains the optimum within grid resolution") {
    const auto r = optimize_allocation(fig3_objective());
    const double ratio = r.allocation.t_bar / r.allocation.b_bar;
    const auto pts = sweep_overhead(fig3_objective(), ratio, 2001);
    double peak = 0.0;
    for (const auto& p : pts) peak = std::max(peak, p.rate);
    CHECK(peak == doctest::Approx(r.rate.value).epsilon(1e-4));
    const auto opt = sweep_overhead_optimized(fig3_objective(), 201);
    double opt_peak = 0.0;
    for (const auto& p : opt) opt_peak = std::max(opt_peak, p.rate);
    CHECK(opt_peak <= r.rate.value + 1e-12);
    CHECK(opt_peak == doctest::Approx(r.rate.value).epsilon(1e-3));
  }

  TEST_CASE("MIMO sweeps stop at the feedback cap") {
    const auto pts = sweep_overhead(fig6_objective(), 1.0, 101);
    REQUIRE_FALSE(pts.empty());
    CHECK(pts.size() < 101);
    CHECK(pts.back().b_bar <= b_star(2.0));
    for (const auto& p : sweep_overhead_optimized(fig6_objective(), 51)) {
      CHECK(p.b_bar <= b_star(2.0) + 1e-12);
    }
  }

  TEST_CASE("asymptotic predictions") {
    const SystemConfig c{100, 1, kRho, 100.0, 1.0};
    const auto p = asymptotic_prediction(c, ChannelKind::kMiso);
    // ln(10^4 ln 2) - ln(1 + 10^{-0.5}) - 2, evaluated with mpmath.
    CHECK(p.offset_upper == doctest::Approx(6.569057558986173116350741890936185632403).epsilon(1e-13));
    CHECK(p.offset_lower == doctest::Approx(p.offset_upper - std::log1p(kRho)));
    CHECK(p.t_bar_pred * std::log(100.0) == doctest::Approx(100.0));
    CHECK(p.b_bar_pred == doctest::Approx(p.t_bar_pred));
    CHECK(p.data_fraction_pred == doctest::Approx(1.0 - 2.0 / std::log(100.0)));

    const SystemConfig m{4, 8, kRho, 50.0, 1.0};
    const auto q = asymptotic_prediction(m, ChannelKind::kMimo, 10.0);
    CHECK(q.b_bar_pred == doctest::Approx(50.0 * 50.0 * kLn2 / (2.0 * 2.0 * 100.0)).epsilon(1e-14));
    CHECK(q.b_bar_pred == doctest::Approx(4.332169878499658183857700759113603550472).epsilon(1e-14));
    CHECK(q.offset_upper == doctest::Approx(std::log(100.0) - std::log1p(1.0 / kRho) - 1.0));
    CHECK(q.t_bar_pred == doctest::Approx(5.0));

    for (int n_t : {3, 10, 1000}) {
      for (auto kind : {ChannelKind::kMiso, ChannelKind::kMimo}) {
        const auto r = asymptotic_prediction(SystemConfig{n_t, 2 * n_t, kRho, 10.0, 1.0}, kind);
        CHECK(r.t_bar_pred > 0.0);
        CHECK(r.b_bar_pred > 0.0);
      }
    }
    CHECK_THROWS_AS(asymptotic_prediction(SystemConfig{2, 1, kRho, 10.0, 1.0}, ChannelKind::kMiso),
                    DomainError);
  }

  TEST_CASE("MISO feedback and training stay balanced at large N_t") {
    // mu B / T tends to one only at log log N_t speed; over the reachable
    // range it stays within 20% of one.
    const SystemConfig base{0, 1, kRho, 50.0, 1.0};
    const auto rows =
        convergence_series(base, ChannelKind::kMiso, {100, 10000, 1000000, 100000000});
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
      CAPTURE(row.n_t);
      CHECK(row.ratio > 0.8);
      CHECK(row.ratio < 1.2);
      CHECK(row.optimum.allocation.t_bar >= 1.0);
    }
  }

  TEST_CASE("convergence_series input checks and scaling") {
    const SystemConfig base{0, 1, kRho, 50.0, 1.0};
    CHECK_THROWS_AS(convergence_series(base, ChannelKind::kMiso, {2, 10}), DomainError);
    CHECK_THROWS_AS(convergence_series(base, ChannelKind::kMiso, {10, 10}), DomainError);
    const auto rows = convergence_series(base, ChannelKind::kMimo, {10, 100}, 2.0);
    for (const auto& row : rows) {
      const double ln = std::log(static_cast<double>(row.n_t));
      CHECK(row.t_scaled == doctest::Approx(row.optimum.allocation.t_bar * ln));
      CHECK(row.b_scaled == doctest::Approx(row.optimum.allocation.b_bar * ln * ln));
      CHECK(row.capacity_offset ==
            doctest::Approx(row.optimum.rate.value - std::log(kRho * row.n_t) + std::log(ln)));
    }
  }
}
