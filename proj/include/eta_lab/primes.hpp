/* Copyright 2026 The eta_lab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eta_lab {

/// All primes up to a limit, in increasing order.
///
/// `nth(k)` is 1-based so that `nth(k)` is the k-th prime p_k (p_1 = 2).
/// `values()` exposes the same data 0-based for bulk loops.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return primes_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return primes_; }

  std::uint64_t nth(std::size_t k) const;
  bool contains(std::uint64_t n) const;

  /// A table holding at least `count` primes.
  static PrimeTable with_count(std::size_t count);

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable sieve_primes(std::uint64_t limit);

/// Shared table up to 10^5, the default eta cap.
const PrimeTable& default_primes();

}  // namespace eta_lab
