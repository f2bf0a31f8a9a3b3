// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lfb/error.hpp"

namespace lfb {

void SystemConfig::validate(int min_n_t) const {
  if (n_t < min_n_t) {
    detail::throw_domain("n_t must be at least " + std::to_string(min_n_t) + ", got " +
                         std::to_string(n_t));
  }
  if (n_r < 1) detail::throw_domain("n_r must be at least 1");
  if (!(snr > 0.0)) detail::throw_domain("snr must be positive");
  if (!(l_bar > 0.0)) detail::throw_domain("l_bar must be positive");
  if (!(mu > 0.0)) detail::throw_domain("mu must be positive");
}

double snr_from_db(double db) { return std::pow(10.0, db / 10.0); }

OverheadAllocation OverheadAllocation::from_overhead(double t_bar, double b_bar,
                                                     double l_bar, double mu) {
  return {t_bar, b_bar, l_bar - t_bar - mu * b_bar};
}

bool OverheadAllocation::satisfies_constraint(double l_bar, double mu, double tol) const {
  return t_bar >= 0.0 && b_bar >= 0.0 && d_bar >= 0.0 &&
         std::abs(t_bar + mu * b_bar + d_bar - l_bar) <= tol;
}

double mse_variance(double t_bar, double snr) {
  if (!(t_bar >= 0.0)) detail::throw_domain("mse_variance: t_bar must be nonnegative");
  if (!(snr > 0.0)) detail::throw_domain("mse_variance: snr must be positive");
  if (t_bar < 1.0) return 1.0 - t_bar / (1.0 + 1.0 / snr);
  return 1.0 / (1.0 + snr * t_bar);
}

TrainingDesign training_matrix(int t, int n_t) {
  if (t < 1) detail::throw_domain("training_matrix: need at least one pilot");
  if (n_t < 1) detail::throw_domain("training_matrix: need at least one antenna");
  TrainingDesign d;
  d.pilot_symbols = CVector::Ones(t);
  if (t <= n_t) {
    d.pilot_matrix = CMatrix::Identity(n_t, t);
    return d;
  }
  d.pilot_matrix.resize(n_t, t);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_t));
  for (int n = 0; n < n_t; ++n) {
    for (int k = 0; k < t; ++k) {
      // reduce n*k mod t first so the phase stays exact for large t
      const long long nk = (static_cast<long long>(n) * k) % t;
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(nk) / t;
      d.pilot_matrix(n, k) = std::polar(scale, phase);
    }
  }
  return d;
}

MmseEstimator::MmseEstimator(const TrainingDesign& design, double snr) {
  if (!(snr > 0.0)) detail::throw_domain("mmse: snr must be positive");
  const CMatrix& v = design.pilot_matrix;
  const int t = design.pilots();
  if (design.pilot_symbols.size() != t) {
    throw std::invalid_argument("mmse: pilot symbol count does not match pilot matrix");
  }
  CMatrix gram = v.adjoint() * v;
  gram.diagonal().array() += 1.0 / snr;
  // C = B^H (V^H V + sigma_n^2 I)^{-1} V^H
  const CMatrix inv_vh = gram.ldlt().solve(v.adjoint());
  filter_ = design.pilot_symbols.conjugate().asDiagonal() * inv_vh;
}

CRowVector MmseEstimator::estimate(std::span<const cdouble> received) const {
  if (static_cast<Eigen::Index>(received.size()) != filter_.rows()) {
    throw std::invalid_argument("mmse: received length " + std::to_string(received.size()) +
                                " does not match pilot count " +
                                std::to_string(filter_.rows()));
  }
  const Eigen::Map<const CRowVector> r(received.data(),
                                       static_cast<Eigen::Index>(received.size()));
  return r * filter_;
}

CRowVector mmse_estimate(std::span<const cdouble> received, const TrainingDesign& design,
                         double snr) {
  return MmseEstimator(design, snr).estimate(received);
}

CMatrix sample_gaussian(int rows, int cols, double variance, RandomStream& stream) {
  CMatrix m(rows, cols);
  const double scale = std::sqrt(variance);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = scale * stream.complex_normal();
  }
  return m;
}

std::pair<ChannelRealization, ChannelEstimate> synthesize_estimate(int n_r, int n_t,
                                                                   double sigma_w2,
                                                                   RandomStream& stream) {
  if (!(sigma_w2 >= 0.0 && sigma_w2 <= 1.0)) {
    detail::throw_domain("synthesize_estimate: sigma_w2 must lie in [0, 1]");
  }
  if (n_r < 1 || n_t < 1) detail::throw_domain("synthesize_estimate: empty channel");
  ChannelEstimate est{sample_gaussian(n_r, n_t, 1.0 - sigma_w2, stream), sigma_w2};
  ChannelRealization h{est.estimate + sample_gaussian(n_r, n_t, sigma_w2, stream)};
  return {std::move(h), std::move(est)};
}

std::pair<ChannelRealization, ChannelEstimate> synthesize_estimate(int n_r, int n_t,
                                                                   double sigma_w2,
                                                                   std::uint64_t seed) {
  auto stream = make_stream(seed, StreamPurpose::kChannel, 0);
  return synthesize_estimate(n_r, n_t, sigma_w2, stream);
}

}  // namespace lfb
