// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Special-function kernels. All logarithms are natural.

namespace lfb {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kE = 2.71828182845904523536;

/// Lower endpoint of the real domain of Lambert W, where both real branches
/// meet at w = -1.
struct BranchPoint {
  static constexpr double abscissa = -0.36787944117144232160;  // -1/e
  static constexpr double euler_gamma = kEulerGamma;
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ln B(m, n) = ln Gamma(m) + ln Gamma(n) - ln Gamma(m + n).
///
/// When one argument is large (a codebook size 2^B) the Gamma difference is
/// formed from a Stirling expansion so that the small argument is not lost
/// against the large one.
double log_beta(double m, double n);

/// ln [Gamma(x) / Gamma(x + delta)] accurate for large x and small delta.
double log_gamma_ratio(double x, double delta);

/// Lower real branch W_{-1}(x), x in [-1/e, 0). Returns w <= -1 with
/// w * exp(w) = x.
double lambert_w_m1(double x);

}  // namespace lfb
