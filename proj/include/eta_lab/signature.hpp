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

#include <cstdint>
#include <span>
#include <vector>

#include "eta_lab/discriminant.hpp"
#include "eta_lab/kernels.hpp"
#include "eta_lab/primes.hpp"

namespace eta_lab {

/// Per-discriminant sign data over the window p_1 .. p_32, aligned with a
/// DiscriminantTable: bit i of negative()[j] is set iff chi_D(p_{i+1}) = -1,
/// bit i of zero()[j] iff p_{i+1} | D. least_negative()[j] is n(D), or 0 for D = 1.
class SignatureTable {
 public:
  /// n(D) beyond the window is found by a direct scan up to `cap`; throws
  /// CapExceededError if that scan runs out.
  SignatureTable(const DiscriminantTable& table, const PrimeTable& primes, std::uint64_t cap);

  std::size_t size() const noexcept { return negative_.size(); }
  std::span<const std::uint32_t> negative() const noexcept { return negative_; }
  std::span<const std::uint32_t> zero() const noexcept { return zero_; }
  std::span<const std::uint32_t> least_negative() const noexcept { return least_negative_; }

  /// p_{i+1} for window index i.
  std::uint32_t window_prime(std::size_t i) const noexcept { return window_[i]; }
  std::span<const std::uint32_t> window() const noexcept { return window_; }

 private:
  std::vector<std::uint32_t> window_;
  std::vector<std::uint32_t> negative_;
  std::vector<std::uint32_t> zero_;
  std::vector<std::uint32_t> least_negative_;
};

}  // namespace eta_lab
