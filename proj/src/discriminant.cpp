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
#include "eta_lab/discriminant.hpp"

#include <algorithm>
#include <string>

#include "eta_lab/error.hpp"
#include "eta_lab/primes.hpp"

namespace eta_lab {

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return false;
    }
  }
  return true;
}

bool is_fundamental(std::int64_t d) {
  if (d == 0) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  const auto mag = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  if (r == 1) return is_squarefree(mag(d));
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && is_squarefree(mag(m));
}

FundamentalDiscriminant::FundamentalDiscriminant(std::int64_t d) : d_(d) {
  if (!is_fundamental(d)) {
    throw InvalidArgument(std::to_string(d) + " is not a fundamental discriminant");
  }
}

std::size_t DiscriminantTable::count_up_to(std::uint64_t y) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), y,
                                   [](std::uint64_t bound, std::int32_t v) {
                                     const auto m = static_cast<std::uint64_t>(v < 0 ? -std::int64_t{v} : v);
                                     return bound < m;
                                   });
  return static_cast<std::size_t>(it - values_.begin());
}

DiscriminantTable sieve_fundamental(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("sieve_fundamental: bound must be >= 1");
  if (bound > DiscriminantTable::max_bound) {
    throw InvalidArgument("sieve_fundamental: bound exceeds 2^30");
  }
  // squarefree[n] for 0 <= n <= bound, by striking multiples of p^2.
  std::vector<std::uint8_t> squarefree(bound + 1, 1);
  squarefree[0] = 0;
  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= bound) ++root;
  if (root >= 2) {
    const PrimeTable small = sieve_primes(root);
    for (const std::uint32_t p : small.values()) {
      const std::uint64_t sq = std::uint64_t{p} * p;
      for (std::uint64_t j = sq; j <= bound; j += sq) squarefree[j] = 0;
    }
  }

  DiscriminantTable table;
  table.bound_ = bound;
  // Density is 3/pi^2 of all signed integers.
  table.values_.reserve(static_cast<std::size_t>(0.61 * static_cast<double>(bound)) + 16);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const std::uint64_t mod4 = n & 3;
    bool neg = false;
    bool pos = false;
    if (mod4 == 0) {
      const std::uint64_t q = n >> 2;
      const std::uint64_t qmod4 = q & 3;
      if (squarefree[q]) {
        pos = qmod4 == 2 || qmod4 == 3;
        neg = qmod4 == 2 || qmod4 == 1;  // -q = 2, 3 (mod 4)
      }
    } else if (squarefree[n]) {
      pos = mod4 == 1;
      neg = mod4 == 3;
    }
    const auto v = static_cast<std::int32_t>(n);
    if (neg) table.values_.push_back(-v);
    if (pos) table.values_.push_back(v);
  }
  table.values_.shrink_to_fit();
  return table;
}

}  // namespace eta_lab
