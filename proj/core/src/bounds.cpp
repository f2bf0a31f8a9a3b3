// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "lfb/error.hpp"
#include "lfb/rvq.hpp"

namespace lfb {
namespace {

void require_variance(double sigma_w2) {
  if (!(sigma_w2 >= 0.0 && sigma_w2 <= 1.0)) {
    detail::throw_domain("sigma_w2 must lie in [0, 1], got " + std::to_string(sigma_w2));
  }
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) detail::throw_domain(std::string(name) + " must be nonnegative");
}

}  // namespace

CapacityBounds miso_bounds_from_variance(const SystemConfig& config, double sigma_w2,
                                         double b_bar) {
  config.validate();
  require_variance(sigma_w2);
  require_nonnegative(b_bar, "b_bar");

  const double rho = config.snr;
  const double n = config.n_t;
  const double s = sigma_w2;

  CapacityBounds out{0.0, 0.0, ChannelKind::kMiso};
  const double quant = -std::expm1(-b_bar * kLn2);  // 1 - 2^-b
  const double snr_eff = rho * (1.0 - s) / (1.0 + rho * s) * quant * n;
  if (snr_eff > 0.0) {
    const double d = d_factor(config.n_t, b_bar);
    out.lower = std::max(0.0, (1.0 - d) * std::log1p(snr_eff));
  }
  const double nu_upper = expected_nu_bounds(config.n_t, b_bar).upper;
  out.upper = std::log1p(rho * s + rho * (1.0 - s) * n * nu_upper);
  return out;
}

CapacityBounds miso_capacity_bounds(const SystemConfig& config, double t_bar, double b_bar) {
  return miso_bounds_from_variance(config, mse_variance(t_bar, config.snr), b_bar);
}

CapacityBounds mimo_bounds_from_eta(const SystemConfig& config, double sigma_w2, double e_eta,
                                    double c_estimate) {
  config.validate(1);
  require_variance(sigma_w2);
  require_nonnegative(e_eta, "E[eta]");
  if (!(c_estimate >= 0.0 && c_estimate < 1.0)) {
    detail::throw_domain("c_estimate must lie in [0, 1)");
  }
  const double rho = config.snr;
  return {(1.0 - c_estimate) * std::log1p(rho * e_eta / (1.0 + rho * sigma_w2)),
          std::log1p(rho * sigma_w2 + rho * e_eta), ChannelKind::kMimo};
}

CapacityBounds mimo_bounds_from_variance(const SystemConfig& config, double sigma_w2,
                                         double b_bar, double c_estimate) {
  config.validate(1);
  require_variance(sigma_w2);
  const double gamma = gamma_rvq(config.n_r_bar(), b_bar).value;
  return mimo_bounds_from_eta(config, sigma_w2, (1.0 - sigma_w2) * gamma * config.n_t,
                              c_estimate);
}

CapacityBounds mimo_capacity_bounds(const SystemConfig& config, double t_bar, double b_bar,
                                    double c_estimate) {
  return mimo_bounds_from_variance(config, mse_variance(t_bar, config.snr), b_bar,
                                   c_estimate);
}

EffectiveRate effective_rate(double bound_value, const OverheadAllocation& allocation,
                             double l_bar) {
  return {allocation.d_bar / l_bar * bound_value, allocation};
}

ReferenceRates reference_rates(const SystemConfig& config, int bits, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers) {
  config.validate(1);
  if (trials < 1) detail::throw_domain("reference_rates: trials must be at least 1");
  if (bits < 0) detail::throw_domain("reference_rates: bits must be nonnegative");
  // Fail fast on the codebook cap before spawning workers.
  if (bits > kDefaultMaxCodebookBits) {
    throw CapacityError("codebook of " + std::to_string(bits) + " bits exceeds the cap");
  }

  const double rho = config.snr;
  const auto acc = run_trials<2>(trials, workers, [&] {
    return [&config, bits, seed, rho](std::uint64_t trial) {
      auto channel_stream = make_stream(seed, StreamPurpose::kChannel, trial);
      auto codebook_stream = make_stream(seed, StreamPurpose::kCodebook, trial);
      const CMatrix h = sample_gaussian(config.n_r, config.n_t, 1.0, channel_stream);

      double lambda_max = 0.0;
      if (config.n_r == 1) {
        lambda_max = h.squaredNorm();
      } else {
        const bool wide = config.n_r <= config.n_t;
        const CMatrix gram = wide ? CMatrix(h * h.adjoint()) : CMatrix(h.adjoint() * h);
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram, Eigen::EigenvaluesOnly);
        lambda_max = solver.eigenvalues().maxCoeff();
      }
      const Codebook codebook = generate_codebook(config.n_t, bits, codebook_stream);
      const double gain = select_beamformer(h, codebook).gain;
      return std::array<double, 2>{std::log1p(rho * lambda_max), std::log1p(rho * gain)};
    };
  });
  return {acc.sample_mean(0), acc.sample_mean(1)};
}

}  // namespace lfb
