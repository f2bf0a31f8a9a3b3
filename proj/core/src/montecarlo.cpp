// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/montecarlo.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "lfb/error.hpp"
#include "lfb/rvq.hpp"

namespace lfb {
namespace {

void require_bits(int bits) {
  if (bits < 0) detail::throw_domain("bits must be nonnegative");
  if (bits > kDefaultMaxCodebookBits) {
    throw CapacityError("codebook of " + std::to_string(bits) + " bits exceeds the cap");
  }
}

/// Shared codebook in fixed mode, or a fresh one drawn from the trial's
/// codebook stream.
class CodebookSource {
 public:
  CodebookSource(int n_t, int bits, const SimulationSpec& spec)
      : n_t_(n_t), bits_(bits), spec_(spec) {
    if (!spec.fresh_codebook_per_trial) fixed_.emplace(generate_codebook(n_t, bits, spec.seed));
  }

  /// Calls fn(codebook) with the trial's codebook; the fixed one is not copied.
  template <typename Fn>
  auto with_codebook(std::uint64_t trial, Fn&& fn) const {
    if (fixed_) return fn(*fixed_);
    auto stream = make_stream(spec_.seed, StreamPurpose::kCodebook, trial);
    return fn(generate_codebook(n_t_, bits_, stream));
  }

  Selection select(const CMatrix& estimate, std::uint64_t trial) const {
    return with_codebook(trial, [&](const Codebook& cb) { return select_beamformer(estimate, cb); });
  }

 private:
  int n_t_;
  int bits_;
  SimulationSpec spec_;
  std::optional<Codebook> fixed_;
};

cdouble dot_row(const CMatrix& m, Eigen::Index row, std::span<const cdouble> v) {
  cdouble acc{};
  for (Eigen::Index k = 0; k < m.cols(); ++k) acc += m(row, k) * v[static_cast<std::size_t>(k)];
  return acc;
}

/// ||H v||^2 for a codebook vector given as a span.
double received_power(const CMatrix& h, std::span<const cdouble> v) {
  double p = 0.0;
  for (Eigen::Index r = 0; r < h.rows(); ++r) p += std::norm(dot_row(h, r, v));
  return p;
}

}  // namespace

void SimulationSpec::validate() const {
  if (trials < 1) detail::throw_domain("trials must be at least 1");
}

RatePair simulate_rates(const SystemConfig& config, double sigma_w2, int bits,
                        const SimulationSpec& spec) {
  config.validate(1);
  spec.validate();
  require_bits(bits);
  if (!(sigma_w2 >= 0.0 && sigma_w2 <= 1.0)) detail::throw_domain("sigma_w2 must lie in [0, 1]");

  const CodebookSource source(config.n_t, bits, spec);
  const double rho = config.snr;
  const double noise = sigma_w2 + 1.0 / rho;
  const auto acc = run_trials<2>(spec.trials, spec.workers, [&] {
    return [&](std::uint64_t trial) {
      auto stream = make_stream(spec.seed, StreamPurpose::kChannel, trial);
      const auto draw = synthesize_estimate(config.n_r, config.n_t, sigma_w2, stream);
      const CMatrix& h = draw.first.matrix;
      const CMatrix& est = draw.second.estimate;
      return source.with_codebook(trial, [&](const Codebook& codebook) {
        const Selection sel = select_beamformer(est, codebook);
        const double genie = received_power(h, codebook.vector(sel.index));
        return std::array<double, 2>{std::log1p(rho * genie), std::log1p(sel.gain / noise)};
      });
    };
  });
  return {acc.sample_mean(0), acc.sample_mean(1)};
}

RateEstimate simulate_genie_rate(const SystemConfig& config, double sigma_w2, int bits,
                                 const SimulationSpec& spec) {
  return simulate_rates(config, sigma_w2, bits, spec).genie;
}

RateEstimate simulate_lower_rate(const SystemConfig& config, double sigma_w2, int bits,
                                 const SimulationSpec& spec) {
  return simulate_rates(config, sigma_w2, bits, spec).lower;
}

EtaStats estimate_eta_stats(const SystemConfig& config, double sigma_w2, int bits,
                            const SimulationSpec& spec) {
  config.validate(1);
  spec.validate();
  require_bits(bits);
  if (!(sigma_w2 >= 0.0 && sigma_w2 <= 1.0)) detail::throw_domain("sigma_w2 must lie in [0, 1]");

  const CodebookSource source(config.n_t, bits, spec);
  const double scale = 1.0 - sigma_w2;
  const auto acc = run_trials<1>(spec.trials, spec.workers, [&] {
    return [&](std::uint64_t trial) {
      auto stream = make_stream(spec.seed, StreamPurpose::kChannel, trial);
      const CMatrix est = sample_gaussian(config.n_r, config.n_t, scale, stream);
      return std::array<double, 1>{source.select(est, trial).gain};
    };
  });
  EtaStats out;
  out.e_eta = acc.sample_mean(0);
  out.sigma_eta = acc.stddev(0);
  out.c_factor = out.e_eta.mean > 0.0 ? out.sigma_eta / (2.0 * out.e_eta.mean) : 0.0;
  return out;
}

SampleMean validate_mse(int n_t, int t, double snr, const SimulationSpec& spec) {
  spec.validate();
  if (n_t < 1) detail::throw_domain("validate_mse: n_t must be at least 1");
  if (!(snr > 0.0)) detail::throw_domain("validate_mse: snr must be positive");
  const TrainingDesign design = training_matrix(t, n_t);
  const MmseEstimator estimator(design, snr);
  const CMatrix pilots = design.pilot_matrix * design.pilot_symbols.asDiagonal();
  const double noise = 1.0 / snr;

  const auto acc = run_trials<1>(spec.trials, spec.workers, [&] {
    return [&](std::uint64_t trial) {
      auto stream = make_stream(spec.seed, StreamPurpose::kChannel, trial);
      auto noise_stream = make_stream(spec.seed, StreamPurpose::kNoise, trial);
      const CRowVector h = sample_gaussian(1, n_t, 1.0, stream);
      const CRowVector n = sample_gaussian(1, t, noise, noise_stream);
      const CRowVector r = h * pilots + n;
      const CRowVector h_hat = estimator.estimate({r.data(), static_cast<std::size_t>(t)});
      return std::array<double, 1>{(h - h_hat).squaredNorm() / n_t};
    };
  });
  return acc.sample_mean(0);
}

SampleMean validate_e_nu(int n_t, int bits, const SimulationSpec& spec) {
  spec.validate();
  require_bits(bits);
  if (n_t < 1) detail::throw_domain("validate_e_nu: n_t must be at least 1");
  const CodebookSource source(n_t, bits, spec);
  const auto acc = run_trials<1>(spec.trials, spec.workers, [&] {
    return [&](std::uint64_t trial) {
      auto stream = make_stream(spec.seed, StreamPurpose::kChannel, trial);
      const CMatrix h = sample_gaussian(1, n_t, 1.0, stream);
      return std::array<double, 1>{source.select(h, trial).gain / h.squaredNorm()};
    };
  });
  return acc.sample_mean(0);
}

int feedback_bits(double b_bar, int n_t) {
  if (!(b_bar >= 0.0)) detail::throw_domain("feedback_bits: b_bar must be nonnegative");
  return static_cast<int>(std::lround(b_bar * n_t));
}

FiniteSizeBounds finite_size_mimo_bounds(const SystemConfig& config, double t_bar,
                                         double b_bar, const SimulationSpec& spec) {
  config.validate(1);
  FiniteSizeBounds out;
  const double sigma_w2 = mse_variance(t_bar, config.snr);
  out.bits = feedback_bits(b_bar, config.n_t);
  out.eta = estimate_eta_stats(config, sigma_w2, out.bits, spec);
  out.bounds = mimo_bounds_from_eta(config, sigma_w2, out.eta.e_eta.mean, out.eta.c_factor);
  const auto allocation = OverheadAllocation::from_overhead(t_bar, b_bar, config.l_bar, config.mu);
  if (allocation.d_bar < 0.0) detail::throw_domain("finite_size_mimo_bounds: overhead exceeds the block");
  out.lower_rate = effective_rate(out.bounds.lower, allocation, config.l_bar);
  return out;
}

ConcentratedOptimum optimize_with_concentration(const SystemConfig& config,
                                                const SimulationSpec& spec,
                                                const OptimizerOptions& options) {
  RateObjective objective{config, ChannelKind::kMimo, BoundKind::kLower, 0.0};
  const OptimizationResult first = optimize_allocation(objective, options);
  ConcentratedOptimum out;
  out.bits = feedback_bits(first.allocation.b_bar, config.n_t);
  out.eta = estimate_eta_stats(config, mse_variance(first.allocation.t_bar, config.snr),
                               out.bits, spec);
  objective.c_estimate = out.eta.c_factor;
  out.optimum = optimize_allocation(objective, options);
  return out;
}

}  // namespace lfb
