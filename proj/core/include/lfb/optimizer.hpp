// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lfb/bounds.hpp"
#include "lfb/channel.hpp"

namespace lfb {

enum class BoundKind { kLower, kUpper };

/// What to optimize: a bound of a channel kind. `c_estimate` feeds the MIMO
/// lower bound and is ignored otherwise.
struct RateObjective {
  SystemConfig config;
  ChannelKind channel = ChannelKind::kMiso;
  BoundKind bound = BoundKind::kLower;
  double c_estimate = 0.0;

  /// Effective rate at (t_bar, b_bar) with d_bar = l_bar - t_bar - mu b_bar.
  double operator()(double t_bar, double b_bar) const;
  /// Largest admissible b_bar: l_bar / mu, and B* for MIMO.
  double b_bar_cap() const;
};

struct OptimizerOptions {
  int grid = 200;
  double objective_tol = 1e-8;
  double argument_tol = 1e-7;
  int max_sweeps = 500;
};

struct OptimizationResult {
  OverheadAllocation allocation;
  EffectiveRate rate;
  BoundKind bound_kind = BoundKind::kLower;
  int iterations = 0;
  bool tolerance_met = false;
  bool at_feedback_cap = false;  ///< MIMO optimum within 1% of B*
  bool degenerate = false;       ///< objective zero on the whole grid
  double grid_best = 0.0;        ///< best coarse-grid value
};

/// Grid search over the (t_bar, b_bar) triangle, then coordinate descent with
/// golden-section line searches along t_bar, b_bar and the exchange direction
/// that trades training for feedback at fixed d_bar.
OptimizationResult optimize_allocation(const RateObjective& objective,
                                       const OptimizerOptions& options = {});
OptimizationResult optimize_allocation(const SystemConfig& config, ChannelKind channel,
                                       BoundKind bound, double c_estimate = 0.0);

struct SweepPoint {
  double overhead_fraction = 0.0;  ///< (t_bar + mu b_bar) / l_bar
  double t_bar = 0.0;
  double b_bar = 0.0;
  double rate = 0.0;
};

/// Rate along the ray t_bar = ratio * mu * b_bar with the overhead fraction
/// running over [0, 1] in `points` steps. MIMO points beyond B* are dropped.
std::vector<SweepPoint> sweep_overhead(const RateObjective& objective, double ratio,
                                       int points);

/// Same grid of overhead fractions, with the split between training and
/// feedback optimized at each point.
std::vector<SweepPoint> sweep_overhead_optimized(const RateObjective& objective, int points);

/// Large-N_t laws for the optimal allocation at a finite N_t.
struct AsymptoticPrediction {
  double log_n_t = 0.0;
  double t_bar_pred = 0.0;           ///< l_bar / log N_t
  double b_bar_pred = 0.0;           ///< MISO: l_bar / (mu log N_t); MIMO: l_bar^2 ln2 / (2 mu^2 N_r_bar log^2 N_t)
  double offset_upper = 0.0;         ///< zeta* (MISO) or xi* (MIMO)
  double offset_lower = 0.0;         ///< offset_upper - log(1 + rho)
  double data_fraction_pred = 0.0;   ///< d_bar / l_bar
  double capacity_pred = 0.0;        ///< log(rho N_t) - k log log N_t + offset_upper
};

AsymptoticPrediction asymptotic_prediction(const SystemConfig& config, ChannelKind channel);
/// Variant for N_t given through log N_t, e.g. N_t = e^10.
AsymptoticPrediction asymptotic_prediction(const SystemConfig& config, ChannelKind channel,
                                           double log_n_t);

struct ConvergenceRow {
  int n_t = 0;
  OptimizationResult optimum;
  double t_scaled = 0.0;          ///< T_bar° log N_t
  double b_scaled = 0.0;          ///< mu B_bar° log N_t (MISO) or B_bar° log^2 N_t (MIMO)
  double ratio = 0.0;             ///< mu B_bar° / T_bar°
  double capacity_offset = 0.0;   ///< C° - log(rho N_t) + k log log N_t
  AsymptoticPrediction prediction;
};

/// Optimizes the bound for each N_t in the list, with n_r = round(n_r_bar N_t)
/// for MIMO and c = 0, and reports the scaled sequences.
std::vector<ConvergenceRow> convergence_series(const SystemConfig& config_template,
                                               ChannelKind channel,
                                               const std::vector<int>& n_t_list,
                                               double n_r_bar = 1.0,
                                               BoundKind bound = BoundKind::kLower);

}  // namespace lfb
