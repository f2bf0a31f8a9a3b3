// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "lfb/bounds.hpp"
#include "lfb/channel.hpp"
#include "lfb/optimizer.hpp"
#include "lfb/parallel.hpp"

namespace lfb {

/// Monte Carlo run parameters. Trial i draws its channel from channel stream i
/// of `seed` and, when fresh_codebook_per_trial is set, its codebook from
/// codebook stream i; otherwise every trial shares generate_codebook(seed).
struct SimulationSpec {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool fresh_codebook_per_trial = true;
  unsigned workers = 0;  ///< 0 = hardware concurrency

  void validate() const;
};

using RateEstimate = SampleMean;

struct RatePair {
  RateEstimate genie;  ///< E log(1 + rho ||H v(H_hat)||^2)
  RateEstimate lower;  ///< E log(1 + ||H_hat v(H_hat)||^2 / (sigma_w2 + 1/rho))
};

/// Both rate forms from the same draws.
RatePair simulate_rates(const SystemConfig& config, double sigma_w2, int bits,
                        const SimulationSpec& spec);
RateEstimate simulate_genie_rate(const SystemConfig& config, double sigma_w2, int bits,
                                 const SimulationSpec& spec);
RateEstimate simulate_lower_rate(const SystemConfig& config, double sigma_w2, int bits,
                                 const SimulationSpec& spec);

struct EtaStats {
  SampleMean e_eta;        ///< eta = ||H_hat v(H_hat)||^2
  double sigma_eta = 0.0;  ///< sample standard deviation of eta
  double c_factor = 0.0;   ///< sigma_eta / (2 E[eta])
};

EtaStats estimate_eta_stats(const SystemConfig& config, double sigma_w2, int bits,
                            const SimulationSpec& spec);

/// Empirical per-entry MSE of the pilot-based MMSE estimate with t pilots.
SampleMean validate_mse(int n_t, int t, double snr, const SimulationSpec& spec);

/// Empirical E[nu] = E max_j |h v_j|^2 / ||h||^2.
SampleMean validate_e_nu(int n_t, int bits, const SimulationSpec& spec);

/// Codebook size used to simulate a normalized feedback level: round(b_bar N_t).
int feedback_bits(double b_bar, int n_t);

/// MIMO bounds at (t_bar, b_bar) with E[eta] and c both estimated by Monte
/// Carlo at B = feedback_bits(b_bar, N_t). Valid beyond B*.
struct FiniteSizeBounds {
  CapacityBounds bounds;
  EffectiveRate lower_rate;
  EtaStats eta;
  int bits = 0;
};
FiniteSizeBounds finite_size_mimo_bounds(const SystemConfig& config, double t_bar,
                                         double b_bar, const SimulationSpec& spec);

/// Optimizes the MIMO lower bound with c = 0, estimates c by Monte Carlo at
/// the optimum, then re-optimizes with that c. Scaling the bound by a constant
/// does not move its maximizer, so one pass suffices.
struct ConcentratedOptimum {
  OptimizationResult optimum;
  EtaStats eta;
  int bits = 0;
};
ConcentratedOptimum optimize_with_concentration(const SystemConfig& config,
                                                const SimulationSpec& spec,
                                                const OptimizerOptions& options = {});

}  // namespace lfb
