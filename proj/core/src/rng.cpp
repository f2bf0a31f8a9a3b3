// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lfb/rng.hpp"

#include <cmath>
#include <numbers>

namespace lfb {
namespace {

constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  // 53 high bits of the 64-bit word, scaled to [0, 1)
  const std::uint64_t w = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMulA, ctr[0], hi0, lo0);
    mulhilo(kMulB, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeylA;
    key[1] += kWeylB;
  }
  return ctr;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t purpose) {
  return mix64(mix64(seed) ^ mix64(purpose + 0x632BE59BD9B4E019ULL));
}

Philox4x32::Counter RandomStream::next_block() {
  const Philox4x32::Counter ctr = {
      static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  ++counter_;
  return Philox4x32::generate(ctr, key_);
}

double RandomStream::uniform() {
  const auto b = next_block();
  return to_unit(b[0], b[1]);
}

std::complex<double> RandomStream::complex_normal() {
  const auto b = next_block();
  // |z|^2 ~ Exp(1) with uniform phase gives CN(0, 1).
  const double u1 = 1.0 - to_unit(b[0], b[1]);  // (0, 1]
  const double u2 = to_unit(b[2], b[3]);
  const double r = std::sqrt(-std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace lfb
