// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/rvq.hpp"

#include <cmath>
#include <string>

#include "lfb/error.hpp"
#include "lfb/numerics.hpp"

namespace lfb {
namespace {

void require_antennas(int n_t, const char* who) {
  if (n_t < 2) {
    detail::throw_domain(std::string(who) + ": n_t must be at least 2, got " +
                         std::to_string(n_t));
  }
}

void require_bits(double bits, const char* who) {
  if (!(bits >= 0.0)) detail::throw_domain(std::string(who) + ": bits must be nonnegative");
  if (bits > 1000.0) {
    detail::throw_domain(std::string(who) + ": 2^bits overflows double precision");
  }
}

}  // namespace

namespace {

std::vector<cdouble> draw_codebook(int n_t, int bits, RandomStream& stream, int max_bits) {
  if (n_t < 1) detail::throw_domain("generate_codebook: n_t must be positive");
  if (bits < 0) detail::throw_domain("generate_codebook: bits must be nonnegative");
  if (bits > max_bits) {
    throw CapacityError("generate_codebook: 2^" + std::to_string(bits) +
                        " vectors exceeds the cap of 2^" + std::to_string(max_bits));
  }
  const std::size_t count = std::size_t{1} << bits;
  std::vector<cdouble> entries(count * static_cast<std::size_t>(n_t));
  for (std::size_t j = 0; j < count; ++j) {
    cdouble* v = entries.data() + j * static_cast<std::size_t>(n_t);
    double norm2 = 0.0;
    for (int k = 0; k < n_t; ++k) {
      v[k] = stream.complex_normal();
      norm2 += std::norm(v[k]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int k = 0; k < n_t; ++k) v[k] *= inv;
  }
  return entries;
}

}  // namespace

Codebook generate_codebook(int n_t, int bits, RandomStream& stream, int max_bits) {
  return Codebook(n_t, bits, draw_codebook(n_t, bits, stream, max_bits), 0);
}

Codebook generate_codebook(int n_t, int bits, std::uint64_t seed, int max_bits) {
  auto stream = make_stream(seed, StreamPurpose::kCodebook, 0);
  return Codebook(n_t, bits, draw_codebook(n_t, bits, stream, max_bits), seed);
}

Selection select_beamformer(const CMatrix& estimate, const Codebook& codebook) {
  const int n_t = codebook.antennas();
  if (estimate.cols() != n_t) {
    throw std::invalid_argument("select_beamformer: estimate has " +
                                std::to_string(estimate.cols()) +
                                " columns, codebook dimension is " + std::to_string(n_t));
  }
  const std::size_t count = codebook.size();
  const cdouble* cb = codebook.data().data();
  Selection best{0, -1.0};

  if (estimate.rows() == 1) {
    // |h v|^2 with explicit real arithmetic; keeps the hot loop free of
    // complex-multiply range checks.
    std::vector<double> hr(n_t), hi(n_t);
    for (int k = 0; k < n_t; ++k) {
      hr[k] = estimate(0, k).real();
      hi[k] = estimate(0, k).imag();
    }
    for (std::size_t j = 0; j < count; ++j) {
      const cdouble* v = cb + j * static_cast<std::size_t>(n_t);
      double re = 0.0, im = 0.0;
      for (int k = 0; k < n_t; ++k) {
        const double vr = v[k].real(), vi = v[k].imag();
        re += hr[k] * vr - hi[k] * vi;
        im += hr[k] * vi + hi[k] * vr;
      }
      const double g = re * re + im * im;
      if (g > best.gain) best = {j, g};
    }
    return best;
  }

  // ||H v||^2 = v^H G v with G = H^H H, Hermitian.
  const CMatrix gram = estimate.adjoint() * estimate;
  std::vector<double> diag(n_t);
  std::vector<double> gr(static_cast<std::size_t>(n_t) * n_t), gi(gr.size());
  for (int a = 0; a < n_t; ++a) {
    diag[a] = gram(a, a).real();
    for (int b = 0; b < n_t; ++b) {
      gr[a * n_t + b] = gram(a, b).real();
      gi[a * n_t + b] = gram(a, b).imag();
    }
  }
  for (std::size_t j = 0; j < count; ++j) {
    const cdouble* v = cb + j * static_cast<std::size_t>(n_t);
    double g = 0.0;
    for (int a = 0; a < n_t; ++a) {
      const double ar = v[a].real(), ai = v[a].imag();
      g += diag[a] * (ar * ar + ai * ai);
      double cross = 0.0;
      for (int b = a + 1; b < n_t; ++b) {
        // Re{ conj(v_a) G_ab v_b }
        const double br = v[b].real(), bi = v[b].imag();
        const double wr = gr[a * n_t + b] * br - gi[a * n_t + b] * bi;
        const double wi = gr[a * n_t + b] * bi + gi[a * n_t + b] * br;
        cross += ar * wr + ai * wi;
      }
      g += 2.0 * cross;
    }
    if (g > best.gain) best = {j, g};
  }
  return best;
}

Selection select_beamformer(const ChannelEstimate& estimate, const Codebook& codebook) {
  return select_beamformer(estimate.estimate, codebook);
}

double expected_nu_exact(int n_t, double bits) {
  require_antennas(n_t, "expected_nu_exact");
  require_bits(bits, "expected_nu_exact");
  const double n = std::exp2(bits);
  const double q = 1.0 + 1.0 / (n_t - 1);
  return -std::expm1(bits * kLn2 + log_beta(n, q));
}

NuBounds expected_nu_bounds(int n_t, double b_bar) {
  require_antennas(n_t, "expected_nu_bounds");
  if (!(b_bar >= 0.0)) detail::throw_domain("expected_nu_bounds: b_bar must be nonnegative");
  const double p = std::exp2(-b_bar);
  const double lower = 1.0 - p;
  const double upper =
      lower + (1.0 + (kEulerGamma - 1.0) * p + std::exp2(-b_bar * n_t)) / (n_t - 1);
  return {lower, upper};
}

double var_nu(int n_t, double bits) {
  require_antennas(n_t, "var_nu");
  require_bits(bits, "var_nu");
  const double n = std::exp2(bits);
  const double a = 1.0 / (n_t - 1);
  const double log_n = bits * kLn2;
  const double second = std::exp(log_n + log_beta(n, 1.0 + 2.0 * a));  // E[(1 - nu)^2]
  const double first = std::exp(log_n + log_beta(n, 1.0 + a));         // E[1 - nu]
  return std::max(0.0, second - first * first);
}

double d_factor(int n_t, double b_bar) {
  require_antennas(n_t, "d_factor");
  if (!(b_bar >= 0.0)) detail::throw_domain("d_factor: b_bar must be nonnegative");
  const double a = 1.0 / (n_t - 1);
  const double lg1 = log_gamma(1.0 + a);
  const double lg2 = log_gamma(1.0 + 2.0 * a);

  // Gamma(1 + 2a) - Gamma(1 + a)^2 (1 + 2^{-b N_t})^{-2a}
  const double log_sub = 2.0 * lg1 - 2.0 * a * std::log1p(std::exp2(-b_bar * n_t));
  const double numer = -std::exp(lg2) * std::expm1(log_sub - lg2);

  // 2^{b (1 + a)} - Gamma(1 + a)
  const double base = std::exp(lg1) * std::expm1(b_bar * (1.0 + a) * kLn2 - lg1);
  if (base == 0.0) {
    throw SingularInputError("d_factor: denominator vanishes at n_t = " +
                             std::to_string(n_t) + ", b_bar = " + std::to_string(b_bar));
  }
  // For huge b_bar the quantization term underflows and only 1/n_t remains.
  const double quant = std::isfinite(base) ? numer / (base * base) : 0.0;
  const double inner = 1.0 / n_t + (1.0 + 1.0 / n_t) * quant;
  return 0.5 * std::sqrt(inner);
}

QuantizationStats quantization_stats(int n_t, double b_bar) {
  const double bits = b_bar * n_t;
  return {expected_nu_exact(n_t, bits), var_nu(n_t, bits), d_factor(n_t, b_bar)};
}

double b_star(double n_r_bar) {
  if (!(n_r_bar > 0.0)) detail::throw_domain("b_star: n_r_bar must be positive");
  const double s = std::sqrt(n_r_bar);
  return (n_r_bar * std::log(s) - n_r_bar * std::log1p(s) + s) / kLn2;
}

GammaRvq gamma_rvq(double n_r_bar, double b_bar) {
  if (!(n_r_bar > 0.0)) detail::throw_domain("gamma_rvq: n_r_bar must be positive");
  if (!(b_bar >= 0.0)) detail::throw_domain("gamma_rvq: b_bar must be nonnegative");
  const double limit = b_star(n_r_bar);
  if (b_bar > limit) {
    throw RegimeError("gamma_rvq: b_bar = " + std::to_string(b_bar) +
                      " exceeds B* = " + std::to_string(limit) +
                      " for n_r_bar = " + std::to_string(n_r_bar));
  }
  const double x = -std::exp(-1.0 - b_bar * kLn2 / n_r_bar);
  const double w = lambert_w_m1(x);
  return {-n_r_bar * w, n_r_bar, b_bar};
}

double gamma_rvq_residual(double gamma, double n_r_bar, double b_bar) {
  const double u = gamma / n_r_bar;
  return -u * std::exp(-u) + std::exp(-1.0 - b_bar * kLn2 / n_r_bar);
}

}  // namespace lfb
