// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lfb/error.hpp"

namespace lfb {
namespace {

// zeta(2) .. zeta(30); coefficients of the Taylor series of ln Gamma(1 + z).
constexpr std::array<double, 29> kZeta = {
    1.644934066848226436472, 1.202056903159594285400, 1.082323233711138191516,
    1.036927755143369926331, 1.017343061984449139715, 1.008349277381922826840,
    1.004077356197944339379, 1.002008392826082214418, 1.000994575127818085337,
    1.000494188604119464559, 1.000246086553308048299, 1.000122713347578489147,
    1.000061248135058704829, 1.000030588236307020494, 1.000015282259408651872,
    1.000007637197637899762, 1.000003817293264999840, 1.000001908212716553939,
    1.000000953962033872796, 1.000000476932986787806, 1.000000238450502727733,
    1.000000119219925965311, 1.000000059608189051259, 1.000000029803503514652,
    1.000000014901554828365, 1.000000007450711789835, 1.000000003725334024788,
    1.000000001862659723513, 1.000000000931327432420,
};

// ln Gamma(1 + z) for |z| <= 0.2; keeps full relative accuracy at the zero z = 0.
double log_gamma_1p_series(double z) {
  double sum = 0.0;
  double zk = -z;  // (-z)^k, starting at k = 1
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    zk *= -z;
    const double term = kZeta[i] * zk / static_cast<double>(i + 2);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma * z + sum;
}

// Lanczos approximation with g = 671/128 and 14 terms; about 1e-15 relative
// accuracy in Gamma for x >= 0.5.
double log_gamma_lanczos(double x) {
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,
      -.210264441724104883e-3, .217439618115212643e-3,
      -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

// Stirling remainder ln Gamma(y) - [(y - 1/2) ln y - y + ln(2 pi)/2], y >= 20.
double stirling_remainder(double y) {
  const double r = 1.0 / y;
  const double r2 = r * r;
  return r * (1.0 / 12.0 +
              r2 * (-1.0 / 360.0 +
                    r2 * (1.0 / 1260.0 +
                          r2 * (-1.0 / 1680.0 +
                                r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360360.0))))));
}

constexpr double kStirlingCutover = 20.0;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    detail::throw_domain("log_gamma: argument must be positive, got " +
                         std::to_string(x));
  }
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    // reflection
    const double pi = std::numbers::pi;
    return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
  }
  if (std::abs(x - 1.0) <= 0.2) return log_gamma_1p_series(x - 1.0);
  if (std::abs(x - 2.0) <= 0.2) {
    const double z = x - 2.0;
    return std::log1p(z) + log_gamma_1p_series(z);
  }
  return log_gamma_lanczos(x);
}

double log_gamma_ratio(double x, double delta) {
  if (!(x > 0.0) || !(x + delta > 0.0)) {
    detail::throw_domain("log_gamma_ratio: arguments must be positive");
  }
  const double y = x + delta;
  if (x < kStirlingCutover || y < kStirlingCutover) {
    return log_gamma(x) - log_gamma(y);
  }
  return -delta * std::log(x) - (y - 0.5) * std::log1p(delta / x) + delta +
         stirling_remainder(x) - stirling_remainder(y);
}

double log_beta(double m, double n) {
  if (!(m > 0.0) || !(n > 0.0)) {
    detail::throw_domain("log_beta: arguments must be positive");
  }
  const double big = std::max(m, n);
  const double small = std::min(m, n);
  if (big >= kStirlingCutover) {
    return log_gamma(small) + log_gamma_ratio(big, small);
  }
  return log_gamma(small) + log_gamma(big) - log_gamma(small + big);
}

double lambert_w_m1(double x) {
  constexpr double a = BranchPoint::abscissa;
  if (!(x < 0.0)) {
    detail::throw_domain("lambert_w_m1: argument must be negative, got " +
                         std::to_string(x));
  }
  if (x <= a) {
    if (a - x <= 4.0 * std::numeric_limits<double>::epsilon() * -a) return -1.0;
    detail::throw_domain("lambert_w_m1: argument below -1/e");
  }

  // 1 + e x, with e split into two doubles so the cancellation near -1/e
  // keeps full relative accuracy.
  constexpr double e_lo = 1.4456468917292502e-16;
  const double near = std::fma(kE, x, 1.0) + e_lo * x;
  const double p = std::sqrt(2.0 * std::max(near, 0.0));
  if (p < 0.02) {
    // Branch-point series in q = -p; the first omitted term is below 1e-17.
    static constexpr double mu[] = {-1.0,
                                    1.0,
                                    -1.0 / 3.0,
                                    11.0 / 72.0,
                                    -43.0 / 540.0,
                                    769.0 / 17280.0,
                                    -221.0 / 8505.0,
                                    680863.0 / 43545600.0,
                                    -1963.0 / 204120.0,
                                    226287557.0 / 37623398400.0};
    const double q = -p;
    double w = 0.0;
    for (int k = 9; k >= 0; --k) w = w * q + mu[k];
    return w;
  }

  double w;
  if (x - a <= 1e-3) {
    w = -1.0 - p - p * p / 3.0;
  } else {
    const double l1 = std::log(-x);
    w = l1 - std::log(-l1);
  }

  // Halley iteration on f(w) = w e^w - x. Iterates are kept on the lower branch.
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (f == 0.0 || wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    double next = w - f / denom;
    if (!(next <= -1.0)) next = 0.5 * (w - 1.0);
    if (std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) {
      w = next;
      break;
    }
    w = next;
  }
  return w;
}

}  // namespace lfb
