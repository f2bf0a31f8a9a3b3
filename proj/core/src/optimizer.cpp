// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfb/error.hpp"
#include "lfb/numerics.hpp"
#include "lfb/rvq.hpp"

namespace lfb {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;

struct LinePoint {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes g on [lo, hi]: a uniform scan with `scan` intervals, then golden
/// section inside the bracket around the best scan point.
template <typename G>
LinePoint maximize_on(G&& g, double lo, double hi, int scan, double tol) {
  if (!(hi > lo)) return {lo, g(lo)};
  int best = 0;
  double best_value = -1.0;
  const double step = (hi - lo) / scan;
  for (int k = 0; k <= scan; ++k) {
    const double v = g(k == scan ? hi : lo + k * step);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  LinePoint out{best == scan ? hi : lo + best * step, best_value};
  double a = lo + std::max(best - 1, 0) * step;
  double b = std::min(hi, lo + (best + 1) * step);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = g(x1);
    }
  }
  if (f1 > out.value) out = {x1, f1};
  if (f2 > out.value) out = {x2, f2};
  return out;
}

constexpr int kLineScan = 16;

}  // namespace

double RateObjective::b_bar_cap() const {
  const double box = config.l_bar / config.mu;
  if (channel == ChannelKind::kMimo) return std::min(box, b_star(config.n_r_bar()));
  return box;
}

double RateObjective::operator()(double t_bar, double b_bar) const {
  const double d_bar = config.l_bar - t_bar - config.mu * b_bar;
  if (!(d_bar > 0.0)) return 0.0;
  CapacityBounds bounds;
  if (channel == ChannelKind::kMiso) {
    bounds = miso_capacity_bounds(config, t_bar, b_bar);
  } else {
    bounds = mimo_capacity_bounds(config, t_bar, b_bar, c_estimate);
  }
  const double per_symbol = bound == BoundKind::kLower ? bounds.lower : bounds.upper;
  return d_bar / config.l_bar * per_symbol;
}

OptimizationResult optimize_allocation(const RateObjective& objective,
                                       const OptimizerOptions& options) {
  const SystemConfig& cfg = objective.config;
  if (!(cfg.l_bar > 0.0)) detail::throw_domain("optimize_allocation: l_bar must be positive");
  cfg.validate(objective.channel == ChannelKind::kMiso ? 2 : 1);
  if (options.grid < 2) detail::throw_domain("optimize_allocation: grid must be at least 2");

  const double l = cfg.l_bar;
  const double mu = cfg.mu;
  const double cap = objective.b_bar_cap();
  const int n = options.grid;

  OptimizationResult result;
  result.bound_kind = objective.bound;

  double t = 0.0;
  double b = 0.0;
  double f = objective(0.0, 0.0);
  for (int i = 0; i <= n; ++i) {
    const double ti = l * i / n;
    for (int j = 0; j <= n; ++j) {
      const double bj = cap * j / n;
      if (ti + mu * bj > l * (1.0 + 1e-12)) break;
      const double v = objective(ti, bj);
      if (v > f) {
        f = v;
        t = ti;
        b = bj;
      }
    }
  }
  result.grid_best = f;

  if (!(f > 0.0)) {
    result.allocation = {0.0, 0.0, l};
    result.rate = {f, result.allocation};
    result.degenerate = true;
    result.tolerance_met = true;
    return result;
  }

  const double line_tol = 1e-3 * options.argument_tol;
  auto accept = [&](double tn, double bn, double v) {
    if (v > f) {
      t = tn;
      b = bn;
      f = v;
    }
  };
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    const double t0 = t;
    const double b0 = b;
    const double f0 = f;

    {
      const auto p = maximize_on([&](double x) { return objective(x, b); }, 0.0,
                                 std::max(0.0, l - mu * b), kLineScan, line_tol);
      accept(p.x, b, p.value);
    }
    {
      const auto p = maximize_on([&](double x) { return objective(t, x); }, 0.0,
                                 std::clamp((l - t) / mu, 0.0, cap), kLineScan, line_tol);
      accept(t, p.x, p.value);
    }
    {
      // Exchange direction: t + mu b = s held fixed, so d_bar is unchanged.
      const double s = t + mu * b;
      const auto p = maximize_on([&](double x) { return objective(s - mu * x, x); }, 0.0,
                                 std::min(cap, s / mu), kLineScan, line_tol);
      accept(s - mu * p.x, p.x, p.value);
    }

    result.iterations = sweep;
    const bool settled = std::abs(t - t0) <= options.argument_tol * std::max(1.0, t) &&
                         std::abs(b - b0) <= options.argument_tol * std::max(1.0, b);
    if (f - f0 < options.objective_tol && settled) {
      result.tolerance_met = true;
      break;
    }
  }

  result.allocation = OverheadAllocation::from_overhead(t, b, l, mu);
  result.rate = {f, result.allocation};
  result.at_feedback_cap = objective.channel == ChannelKind::kMimo &&
                           b >= 0.99 * b_star(cfg.n_r_bar());
  return result;
}

OptimizationResult optimize_allocation(const SystemConfig& config, ChannelKind channel,
                                       BoundKind bound, double c_estimate) {
  return optimize_allocation(RateObjective{config, channel, bound, c_estimate});
}

std::vector<SweepPoint> sweep_overhead(const RateObjective& objective, double ratio,
                                       int points) {
  if (!(ratio > 0.0)) detail::throw_domain("sweep_overhead: ratio must be positive");
  if (points < 2) detail::throw_domain("sweep_overhead: need at least two points");
  const double l = objective.config.l_bar;
  const double mu = objective.config.mu;
  const double cap = objective.b_bar_cap();
  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double frac = static_cast<double>(k) / (points - 1);
    const double b = frac * l / (mu * (1.0 + ratio));
    if (b > cap) break;
    const double t = ratio * mu * b;
    out.push_back({frac, t, b, objective(t, b)});
  }
  return out;
}

std::vector<SweepPoint> sweep_overhead_optimized(const RateObjective& objective, int points) {
  if (points < 2) detail::throw_domain("sweep_overhead_optimized: need at least two points");
  const double l = objective.config.l_bar;
  const double mu = objective.config.mu;
  const double cap = objective.b_bar_cap();
  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double frac = static_cast<double>(k) / (points - 1);
    const double s = frac * l;
    const auto p = maximize_on([&](double x) { return objective(s - mu * x, x); }, 0.0,
                               std::min(cap, s / mu), 64, 1e-10 * std::max(1.0, l));
    out.push_back({frac, s - mu * p.x, p.x, p.value});
  }
  return out;
}

AsymptoticPrediction asymptotic_prediction(const SystemConfig& config, ChannelKind channel,
                                           double log_n_t) {
  config.validate(1);
  if (!(log_n_t > 1.0)) {
    detail::throw_domain("asymptotic_prediction: needs log N_t > 1, got " +
                         std::to_string(log_n_t));
  }
  const double l = config.l_bar;
  const double mu = config.mu;
  const double rho = config.snr;
  AsymptoticPrediction p;
  p.log_n_t = log_n_t;
  p.t_bar_pred = l / log_n_t;
  double k = 0.0;
  if (channel == ChannelKind::kMiso) {
    p.b_bar_pred = l / (mu * log_n_t);
    p.offset_upper = std::log(l * l * kLn2) - std::log(mu * (1.0 + 1.0 / rho)) - 2.0;
    p.data_fraction_pred = 1.0 - 2.0 / log_n_t;
    k = 2.0;
  } else {
    const double nr = config.n_r_bar();
    p.b_bar_pred = l * l * kLn2 / (2.0 * mu * mu * nr * log_n_t * log_n_t);
    p.offset_upper = std::log(l * nr) - std::log1p(1.0 / rho) - 1.0;
    p.data_fraction_pred =
        1.0 - 1.0 / log_n_t - l * kLn2 / (2.0 * nr * mu * log_n_t * log_n_t);
    k = 1.0;
  }
  p.offset_lower = p.offset_upper - std::log1p(rho);
  p.capacity_pred = std::log(rho) + log_n_t - k * std::log(log_n_t) + p.offset_upper;
  return p;
}

AsymptoticPrediction asymptotic_prediction(const SystemConfig& config, ChannelKind channel) {
  return asymptotic_prediction(config, channel, std::log(static_cast<double>(config.n_t)));
}

std::vector<ConvergenceRow> convergence_series(const SystemConfig& config_template,
                                               ChannelKind channel,
                                               const std::vector<int>& n_t_list,
                                               double n_r_bar, BoundKind bound) {
  std::vector<ConvergenceRow> rows;
  int previous = 0;
  for (int n_t : n_t_list) {
    if (n_t < 3) detail::throw_domain("convergence_series: every N_t must be at least 3");
    if (n_t <= previous) detail::throw_domain("convergence_series: N_t list must increase");
    previous = n_t;

    SystemConfig cfg = config_template;
    cfg.n_t = n_t;
    cfg.n_r = channel == ChannelKind::kMiso
                  ? 1
                  : std::max(1, static_cast<int>(std::lround(n_r_bar * n_t)));
    ConvergenceRow row;
    row.n_t = n_t;
    row.optimum = optimize_allocation(RateObjective{cfg, channel, bound, 0.0});
    const double log_n = std::log(static_cast<double>(n_t));
    const auto& a = row.optimum.allocation;
    row.t_scaled = a.t_bar * log_n;
    row.b_scaled = channel == ChannelKind::kMiso ? cfg.mu * a.b_bar * log_n
                                                 : a.b_bar * log_n * log_n;
    row.ratio = a.t_bar > 0.0 ? cfg.mu * a.b_bar / a.t_bar : 0.0;
    const double k = channel == ChannelKind::kMiso ? 2.0 : 1.0;
    row.capacity_offset =
        row.optimum.rate.value - std::log(cfg.snr * n_t) + k * std::log(log_n);
    row.prediction = asymptotic_prediction(cfg, channel, log_n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lfb
