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
#include "eta_lab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eta_lab/error.hpp"

namespace eta_lab {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw InvalidArgument("sieve_primes: limit must be >= 2, got " + std::to_string(limit));
  }
  if (limit > 0xFFFFFFFFull) {
    throw InvalidArgument("sieve_primes: limit exceeds 2^32");
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes_.push_back(static_cast<std::uint32_t>(i));
  }
}

std::uint64_t PrimeTable::nth(std::size_t k) const {
  if (k == 0 || k > primes_.size()) {
    throw InvalidArgument("PrimeTable::nth: index " + std::to_string(k) + " outside 1.." +
                          std::to_string(primes_.size()));
  }
  return primes_[k - 1];
}

bool PrimeTable::contains(std::uint64_t n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n,
                            [](std::uint64_t a, std::uint64_t b) { return a < b; });
}

PrimeTable PrimeTable::with_count(std::size_t count) {
  // p_n < n (ln n + ln ln n) for n >= 6 (Rosser).
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto limit = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  return PrimeTable(limit);
}

PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

const PrimeTable& default_primes() {
  static const PrimeTable table(100000);
  return table;
}

}  // namespace eta_lab
