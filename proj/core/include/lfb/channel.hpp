// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "lfb/rng.hpp"

namespace lfb {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

enum class ChannelKind { kMiso, kMimo };

/// Link-level parameters. Rates derived from it are per channel use, in nats.
struct SystemConfig {
  int n_t = 2;         ///< transmit antennas
  int n_r = 1;         ///< receive antennas (1 for MISO)
  double snr = 1.0;    ///< background SNR rho = 1 / sigma_n^2, linear
  double l_bar = 1.0;  ///< coherence block length per transmit antenna, L / N_t
  double mu = 1.0;     ///< symbols spent per feedback bit

  double n_r_bar() const { return static_cast<double>(n_r) / n_t; }
  double noise_variance() const { return 1.0 / snr; }

  /// Throws DomainError unless n_t >= min_n_t, n_r >= 1 and snr, l_bar, mu > 0.
  void validate(int min_n_t = 2) const;
};

double snr_from_db(double db);

/// Normalized split of a coherence block: t_bar + mu * b_bar + d_bar = l_bar.
struct OverheadAllocation {
  double t_bar = 0.0;
  double b_bar = 0.0;
  double d_bar = 0.0;

  /// Allocation with d_bar eliminated by the block constraint.
  static OverheadAllocation from_overhead(double t_bar, double b_bar, double l_bar,
                                          double mu);

  bool satisfies_constraint(double l_bar, double mu, double tol = 1e-9) const;
  double overhead_fraction(double l_bar, double mu) const {
    return (t_bar + mu * b_bar) / l_bar;
  }
};

struct ChannelRealization {
  CMatrix matrix;  ///< N_r x N_t, i.i.d. CN(0, 1)
};

struct ChannelEstimate {
  CMatrix estimate;             ///< N_r x N_t
  double error_variance = 1.0;  ///< per-entry variance of H - estimate
};

/// Pilot beams (columns of an N_t x T matrix) meeting the Welch bound with
/// equality, and the diagonal pilot symbols.
struct TrainingDesign {
  CMatrix pilot_matrix;
  CVector pilot_symbols;

  int pilots() const { return static_cast<int>(pilot_matrix.cols()); }
  int antennas() const { return static_cast<int>(pilot_matrix.rows()); }
};

/// Per-entry MSE of the linear MMSE estimate with Welch-bound pilots:
///   1 - t_bar / (1 + 1/snr)   for t_bar < 1
///   1 / (1 + snr * t_bar)     for t_bar >= 1
double mse_variance(double t_bar, double snr);

/// For t <= n_t the first t standard basis vectors (one antenna at a time);
/// for t > n_t a DFT-phase frame with V V^H = (t / n_t) I.
TrainingDesign training_matrix(int t, int n_t);

/// Linear MMSE channel estimator for one receive antenna.
///
/// For received pilots r = h V B + n (all row vectors) the estimate is
/// h_hat = r C with C = B^H (V^H V + sigma_n^2 I)^{-1} V^H, a T x N_t matrix.
class MmseEstimator {
 public:
  MmseEstimator(const TrainingDesign& design, double snr);

  /// Estimate one channel row from its T received pilot samples.
  CRowVector estimate(std::span<const cdouble> received) const;
  const CMatrix& filter() const { return filter_; }

 private:
  CMatrix filter_;
};

CRowVector mmse_estimate(std::span<const cdouble> received, const TrainingDesign& design,
                         double snr);

/// Samples the decomposition H = H_hat + w directly: H_hat entries
/// CN(0, 1 - sigma_w2), w entries CN(0, sigma_w2), independent.
std::pair<ChannelRealization, ChannelEstimate> synthesize_estimate(int n_r, int n_t,
                                                                   double sigma_w2,
                                                                   RandomStream& stream);
std::pair<ChannelRealization, ChannelEstimate> synthesize_estimate(int n_r, int n_t,
                                                                   double sigma_w2,
                                                                   std::uint64_t seed);

/// Matrix of i.i.d. CN(0, variance) entries drawn row-major from the stream.
CMatrix sample_gaussian(int rows, int cols, double variance, RandomStream& stream);

}  // namespace lfb
