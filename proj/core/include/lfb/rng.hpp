// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace lfb {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3", SC'11). Stateless: output depends only on
/// (counter, key).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key);
};

/// SplitMix64 finalizer; used to derive independent keys from a user seed.
std::uint64_t mix64(std::uint64_t x);

/// Derive a key for a named purpose (channel draws, codebooks, ...) from a
/// user seed.
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t purpose);

/// A counter-based random stream addressed by (key, stream id). Draw n of
/// stream s is a pure function of (key, s, n), so any trial can be
/// regenerated independently of scheduling.
class RandomStream {
 public:
  RandomStream(std::uint64_t key, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
        stream_id_(stream_id) {}

  /// Uniform double in [0, 1) with 53 random bits; consumes one block and
  /// discards the second half.
  double uniform();

  /// Circularly-symmetric complex Gaussian CN(0, 1): real and imaginary parts
  /// independent N(0, 1/2). Consumes exactly one block.
  std::complex<double> complex_normal();

  std::uint64_t position() const { return counter_; }
  void seek(std::uint64_t position) { counter_ = position; }

 private:
  Philox4x32::Counter next_block();

  Philox4x32::Key key_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
};

/// Purpose tags for derive_key.
enum class StreamPurpose : std::uint64_t {
  kChannel = 0x43484e4cULL,   // "CHNL"
  kCodebook = 0x43444243ULL,  // "CDBC"
  kNoise = 0x4e4f4953ULL,     // "NOIS"
};

inline RandomStream make_stream(std::uint64_t seed, StreamPurpose purpose,
                                std::uint64_t stream_id) {
  return RandomStream(derive_key(seed, static_cast<std::uint64_t>(purpose)), stream_id);
}

}  // namespace lfb
