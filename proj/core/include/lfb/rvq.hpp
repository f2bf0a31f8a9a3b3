// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lfb/channel.hpp"
#include "lfb/rng.hpp"

namespace lfb {

inline constexpr int kDefaultMaxCodebookBits = 24;

/// 2^B i.i.d. isotropic unit-norm vectors in C^{N_t}, stored contiguously.
///
/// Vector j is built from draws j * N_t .. (j + 1) * N_t - 1 of its stream,
/// so a codebook of B + 1 bits starts with the B-bit codebook of the same seed.
class Codebook {
 public:
  Codebook(int n_t, int bits, std::vector<cdouble> entries, std::uint64_t seed)
      : n_t_(n_t), bits_(bits), entries_(std::move(entries)), seed_(seed) {}

  int antennas() const { return n_t_; }
  int bits() const { return bits_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return entries_.size() / static_cast<std::size_t>(n_t_); }

  std::span<const cdouble> vector(std::size_t j) const {
    return {entries_.data() + j * static_cast<std::size_t>(n_t_),
            static_cast<std::size_t>(n_t_)};
  }
  std::span<const cdouble> data() const { return entries_; }

 private:
  int n_t_;
  int bits_;
  std::vector<cdouble> entries_;
  std::uint64_t seed_;
};

Codebook generate_codebook(int n_t, int bits, std::uint64_t seed,
                           int max_bits = kDefaultMaxCodebookBits);
/// Draws from the given stream starting at its current position; the
/// resulting codebook reports seed() == 0.
Codebook generate_codebook(int n_t, int bits, RandomStream& stream,
                           int max_bits = kDefaultMaxCodebookBits);

struct Selection {
  std::size_t index = 0;
  double gain = 0.0;  ///< ||H_hat v||^2 of the selected vector
};

/// argmax_j ||H_hat v_j||^2, ties to the lowest index.
Selection select_beamformer(const CMatrix& estimate, const Codebook& codebook);
Selection select_beamformer(const ChannelEstimate& estimate, const Codebook& codebook);

struct QuantizationStats {
  double e_nu = 0.0;
  double var_nu = 0.0;
  double d_factor = 0.0;
};

/// E[nu] = 1 - 2^B Beta(2^B, N_t / (N_t - 1)), B may be fractional.
double expected_nu_exact(int n_t, double bits);

struct NuBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Lower and upper bounds on E[nu] in terms of the normalized feedback b_bar.
NuBounds expected_nu_bounds(int n_t, double b_bar);

/// var[nu] = n Beta(n, 1 + 2/(N_t-1)) - n^2 Beta(n, 1 + 1/(N_t-1))^2, n = 2^B.
double var_nu(int n_t, double bits);

/// Concentration factor d(N_t) multiplying the MISO lower bound.
double d_factor(int n_t, double b_bar);

QuantizationStats quantization_stats(int n_t, double b_bar);

/// Largest normalized feedback for which the large-system RVQ gain has the
/// Lambert-W form below.
double b_star(double n_r_bar);

struct GammaRvq {
  double value = 0.0;
  double n_r_bar = 0.0;
  double b_bar = 0.0;
};

/// Large-system received power per transmit antenna under RVQ,
///   gamma = -N_r_bar * W_{-1}(-(1/e) 2^{-b_bar / N_r_bar}),
/// valid for 0 <= b_bar <= b_star(n_r_bar); RegimeError beyond.
GammaRvq gamma_rvq(double n_r_bar, double b_bar);

/// Fixed-point residual (-g/N) e^{-g/N} + (1/e) 2^{-b_bar/N} of a gamma value.
double gamma_rvq_residual(double gamma, double n_r_bar, double b_bar);

}  // namespace lfb
