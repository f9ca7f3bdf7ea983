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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eta_lab {

bool is_squarefree(std::uint64_t n);

/// True iff d is 1 or the discriminant of a quadratic field: d = 1 (mod 4)
/// squarefree, or d = 4m with m squarefree and m = 2, 3 (mod 4).
bool is_fundamental(std::int64_t d);

class FundamentalDiscriminant {
 public:
  explicit FundamentalDiscriminant(std::int64_t d);

  std::int64_t value() const noexcept { return d_; }
  std::uint64_t magnitude() const noexcept {
    return static_cast<std::uint64_t>(d_ < 0 ? -d_ : d_);
  }
  bool is_trivial() const noexcept { return d_ == 1; }

  friend bool operator==(FundamentalDiscriminant, FundamentalDiscriminant) = default;

 private:
  friend class DiscriminantTable;
  struct Trusted {};
  FundamentalDiscriminant(std::int64_t d, Trusted) noexcept : d_(d) {}

  std::int64_t d_;
};

/// Every fundamental discriminant with |D| <= bound, ordered by |D| with the
/// negative one first on ties. Immutable once built.
class DiscriminantTable {
 public:
  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int32_t> values() const noexcept { return values_; }
  FundamentalDiscriminant operator[](std::size_t i) const {
    return FundamentalDiscriminant(values_[i], FundamentalDiscriminant::Trusted{});
  }

  /// Number of entries with |D| <= y. Entries are a prefix in table order.
  std::size_t count_up_to(std::uint64_t y) const;

  /// Largest supported bound; values are stored as 32-bit integers.
  static constexpr std::uint64_t max_bound = std::uint64_t{1} << 30;

 private:
  friend DiscriminantTable sieve_fundamental(std::uint64_t bound);
  std::uint64_t bound_ = 0;
  std::vector<std::int32_t> values_;
};

DiscriminantTable sieve_fundamental(std::uint64_t bound);

}  // namespace eta_lab
