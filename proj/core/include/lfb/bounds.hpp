// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "lfb/channel.hpp"
#include "lfb/numerics.hpp"
#include "lfb/parallel.hpp"

namespace lfb {

/// Per-symbol capacity bounds, in nats per channel use.
struct CapacityBounds {
  double lower = 0.0;
  double upper = 0.0;
  ChannelKind kind = ChannelKind::kMiso;
};

inline double nats_to_bits(double nats) { return nats / kLn2; }

/// MISO bounds with sigma_w^2 from the training length t_bar.
CapacityBounds miso_capacity_bounds(const SystemConfig& config, double t_bar, double b_bar);

/// MISO bounds with an exogenous estimation-error variance.
///
///   lower = (1 - d) log(1 + rho (1 - s) / (1 + rho s) (1 - 2^-b) N_t)
///   upper = log(1 + rho s + rho (1 - s) N_t U)
///
/// where s = sigma_w2 and U is the upper bound on E[nu]. The lower bound is
/// clamped at zero, and is zero without evaluating d when b_bar or 1 - s is.
CapacityBounds miso_bounds_from_variance(const SystemConfig& config, double sigma_w2,
                                         double b_bar);

/// MIMO bounds with E[eta] = (1 - s) gamma_rvq(N_r_bar, b_bar) N_t.
///
/// `c_estimate` is the concentration factor c = sigma_eta / (2 E[eta]): zero
/// for the large-system form, or a Monte Carlo value for finite arrays.
/// Throws RegimeError when b_bar exceeds b_star(N_r_bar).
CapacityBounds mimo_capacity_bounds(const SystemConfig& config, double t_bar, double b_bar,
                                    double c_estimate);
CapacityBounds mimo_bounds_from_variance(const SystemConfig& config, double sigma_w2,
                                         double b_bar, double c_estimate);

/// MIMO bounds from a given E[eta], e.g. a Monte Carlo estimate at a finite
/// codebook size where the large-system gain does not apply.
CapacityBounds mimo_bounds_from_eta(const SystemConfig& config, double sigma_w2, double e_eta,
                                    double c_estimate);

struct EffectiveRate {
  double value = 0.0;  ///< nats per block symbol
  OverheadAllocation allocation;
};

/// (d_bar / l_bar) * bound_value.
EffectiveRate effective_rate(double bound_value, const OverheadAllocation& allocation,
                             double l_bar);

struct ReferenceRates {
  SampleMean perfect_csi;             ///< log(1 + rho lambda_max(H^H H))
  SampleMean rvq_perfect_estimation;  ///< log(1 + rho ||H v(H)||^2)
};

/// Monte Carlo reference rates without estimation error. The channel of trial
/// i is drawn from the channel stream i of `seed` and the codebook (fresh per
/// trial) from the codebook stream i.
ReferenceRates reference_rates(const SystemConfig& config, int bits, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers = 0);

}  // namespace lfb
