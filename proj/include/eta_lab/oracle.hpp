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

// Brute-force reference computations built only from the definitional
// predicate is_fundamental, the Kronecker symbol and trial division. They
// share no aggregation code with the experiments and are meant for small x.

#include <cstdint>
#include <utility>
#include <vector>

#include "eta_lab/sign.hpp"

namespace eta_lab::oracle {

/// Fundamental discriminants with |D| <= x, in table order.
std::vector<std::int64_t> fundamentals(std::uint64_t x);

/// Least prime with sign -1 under the coefficient sign rule, scanning
/// primes by trial division; 0 when D2 = 1.
std::uint64_t eta_by_scan(std::int64_t d1, std::int64_t d2);

/// Least n >= 1 with chi_D(n) not in {0, 1}; 0 when D = 1.
std::uint64_t least_negative_by_scan(std::int64_t d);

struct PairTotals {
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_excluded = 0;
  std::uint64_t sum_eta = 0;
};

/// Double loop over ordered pairs with |D1 D2| <= x.
PairTotals pair_totals(std::uint64_t x);

/// Counts of chi_D(p) = +1, -1, 0 over |D| <= x.
struct SignCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
};
SignCounts character_counts(std::uint64_t x, std::uint64_t p);

/// Pairs (D1, D2) != (1, 1) with |D1 D2| <= x matching a sign pattern, and
/// the number of such pairs.
std::pair<std::uint64_t, std::uint64_t> pattern_count(std::uint64_t x,
                                                      const std::vector<std::pair<std::uint32_t, Sign>>& pattern);

}  // namespace eta_lab::oracle
