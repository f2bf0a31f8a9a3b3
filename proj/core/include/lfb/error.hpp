// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lfb {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Feedback load beyond the interval where the large-system RVQ gain is known.
class RegimeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Request exceeds a configured resource cap (codebook size, trial count).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Formula evaluated at a point where it is singular.
class SingularInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
[[noreturn]] inline void throw_domain(const std::string& what) {
  throw DomainError(what);
}
}  // namespace detail

}  // namespace lfb
