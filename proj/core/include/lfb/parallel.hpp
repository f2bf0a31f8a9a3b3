// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lfb {

/// Sample mean with its standard error.
struct SampleMean {
  double mean = 0.0;
  double std_err = 0.0;
  std::uint64_t trials = 0;
};

/// Running mean and second central moment for K quantities (Welford), with
/// the pairwise merge of Chan et al.
template <std::size_t K>
class MomentAccumulator {
 public:
  void add(const std::array<double, K>& x) {
    ++count_;
    const double n = static_cast<double>(count_);
    for (std::size_t k = 0; k < K; ++k) {
      const double delta = x[k] - mean_[k];
      mean_[k] += delta / n;
      m2_[k] += delta * (x[k] - mean_[k]);
    }
  }

  void merge(const MomentAccumulator& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    for (std::size_t k = 0; k < K; ++k) {
      const double delta = other.mean_[k] - mean_[k];
      mean_[k] += delta * nb / n;
      m2_[k] += other.m2_[k] + delta * delta * na * nb / n;
    }
    count_ += other.count_;
  }

  std::uint64_t count() const { return count_; }
  double mean(std::size_t k) const { return mean_[k]; }
  double variance(std::size_t k) const {
    return count_ > 1 ? m2_[k] / static_cast<double>(count_ - 1) : 0.0;
  }
  double stddev(std::size_t k) const { return std::sqrt(variance(k)); }
  SampleMean sample_mean(std::size_t k) const {
    const double se =
        count_ > 0 ? std::sqrt(variance(k) / static_cast<double>(count_)) : 0.0;
    return {mean_[k], se, count_};
  }

 private:
  std::uint64_t count_ = 0;
  std::array<double, K> mean_{};
  std::array<double, K> m2_{};
};

inline constexpr std::uint64_t kTrialBlock = 256;

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs trials 0 .. trials-1 and returns their moments.
///
/// `make_kernel()` is called once per worker and must return a callable
/// `std::array<double, K>(std::uint64_t trial)` that depends only on the
/// trial index. Trials are grouped into fixed blocks whose accumulators are
/// merged in block order, so the result is bit-identical for any worker count.
template <std::size_t K, typename MakeKernel>
MomentAccumulator<K> run_trials(std::uint64_t trials, unsigned workers,
                                MakeKernel&& make_kernel) {
  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<MomentAccumulator<K>> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      auto kernel = make_kernel();
      for (std::uint64_t b = next++; b < blocks; b = next++) {
        const std::uint64_t end = std::min(trials, (b + 1) * kTrialBlock);
        for (std::uint64_t i = b * kTrialBlock; i < end; ++i) partial[b].add(kernel(i));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };

  const unsigned n = std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(blocks, 1));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  MomentAccumulator<K> total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace lfb
