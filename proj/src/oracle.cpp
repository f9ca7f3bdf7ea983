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
#include "eta_lab/oracle.hpp"

#include "eta_lab/discriminant.hpp"
#include "eta_lab/kronecker.hpp"

namespace eta_lab::oracle {

namespace {

std::uint64_t mag(std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

Sign coefficient_sign(std::int64_t d1, std::int64_t d2, std::uint64_t p) {
  // a(p) = chi1(p) + chi2(p) p^{k-1}; evaluated at k = 2 with plain integers.
  const long a = to_int(kronecker(d1, p)) + to_int(kronecker(d2, p)) * static_cast<long>(p);
  return sign_of(a);
}

}  // namespace

std::vector<std::int64_t> fundamentals(std::uint64_t x) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; static_cast<std::uint64_t>(n) <= x; ++n) {
    if (is_fundamental(-n)) out.push_back(-n);
    if (is_fundamental(n)) out.push_back(n);
  }
  return out;
}

std::uint64_t eta_by_scan(std::int64_t d1, std::int64_t d2) {
  if (d2 == 1) return 0;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime_trial(p)) continue;
    if (coefficient_sign(d1, d2, p) == Sign::negative) return p;
  }
}

std::uint64_t least_negative_by_scan(std::int64_t d) {
  if (d == 1) return 0;
  for (std::uint64_t n = 1;; ++n) {
    if (kronecker(d, n) == Sign::negative) return n;
  }
}

PairTotals pair_totals(std::uint64_t x) {
  const std::vector<std::int64_t> ds = fundamentals(x);
  PairTotals t;
  for (const std::int64_t d1 : ds) {
    for (const std::int64_t d2 : ds) {
      if (mag(d1) * mag(d2) > x) continue;
      ++t.pairs_total;
      if (d2 == 1) {
        ++t.pairs_excluded;
        continue;
      }
      t.sum_eta += eta_by_scan(d1, d2);
    }
  }
  return t;
}

SignCounts character_counts(std::uint64_t x, std::uint64_t p) {
  SignCounts c;
  for (const std::int64_t d : fundamentals(x)) {
    switch (kronecker(d, p)) {
      case Sign::positive: ++c.positive; break;
      case Sign::negative: ++c.negative; break;
      case Sign::zero: ++c.zero; break;
    }
  }
  return c;
}

std::pair<std::uint64_t, std::uint64_t> pattern_count(std::uint64_t x,
                                                      const std::vector<std::pair<std::uint32_t, Sign>>& pattern) {
  const std::vector<std::int64_t> ds = fundamentals(x);
  std::uint64_t matches = 0;
  std::uint64_t pairs = 0;
  for (const std::int64_t d1 : ds) {
    for (const std::int64_t d2 : ds) {
      if (mag(d1) * mag(d2) > x || (d1 == 1 && d2 == 1)) continue;
      ++pairs;
      bool ok = true;
      for (const auto& [p, s] : pattern) ok = ok && coefficient_sign(d1, d2, p) == s;
      if (ok) ++matches;
    }
  }
  return {matches, pairs};
}

}  // namespace eta_lab::oracle
