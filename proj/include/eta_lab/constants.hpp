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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eta_lab/primes.hpp"
#include "eta_lab/rational.hpp"

namespace eta_lab {

/// Prime-indexed series whose limits govern the first-negative-sign averages.
///   theta     : conjectured limit of the eta average (fixed-prime heuristic)
///   big_theta : limit of the average of n(D)
///   alpha, beta : correction series; the eta average tends to Theta(1-beta)+alpha
///   erdos     : sum p_k / 2^k, the limit of the average of n_1(p)
enum class Series { theta, big_theta, alpha, beta, erdos };

inline constexpr Series kAllSeries[] = {Series::theta, Series::big_theta, Series::alpha, Series::beta,
                                        Series::erdos};

std::string_view series_name(Series s);
std::optional<Series> parse_series(std::string_view name);

inline constexpr std::size_t kDefaultTruncation = 1000;

/// Exact terms 1..K of a series.
std::vector<BigRational> series_terms(Series s, std::size_t count, const PrimeTable& primes);

/// Exact sum of the first K terms. The running product is carried forward,
/// so this costs K rational multiplications.
BigRational partial_sum(Series s, std::size_t count, const PrimeTable& primes);

/// Upper bound on sum_{k > K} term_k. Requires p_K >= 25 so that every later
/// gap obeys p_{k+1} <= 6/5 p_k (Nagura), and K + 1 primes in the table.
///
/// For the four density series term_{k+1}/term_k <= (6/5)^2 (1/2 + 1/(2(p_{K+1}+1))) =: r
/// for every k > K, so the tail is at most term_{K+1} / (1 - r). For erdos r = 3/5.
BigRational tail_bound(Series s, std::size_t count, const PrimeTable& primes);

/// Interval [lo, hi] with exact rational endpoints containing a series limit.
struct RigorousValue {
  std::string name;
  std::size_t truncation = 0;
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const;
  bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
  bool contains(const RigorousValue& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

RigorousValue rigorous_constant(Series s, std::size_t count, const PrimeTable& primes);
RigorousValue rigorous_constant(Series s, std::size_t count = kDefaultTruncation);

/// Theta(1 - beta) + alpha over enclosures, using 0 <= beta <= 1.
RigorousValue combined_constant(std::size_t count, const PrimeTable& primes);
RigorousValue combined_constant(std::size_t count = kDefaultTruncation);

/// mu = combined - theta, the share of the average the fixed-prime heuristic misses.
RigorousValue mu_constant(std::size_t count, const PrimeTable& primes);

/// Decimal rendering with `digits` fractional digits.
///  - lo == hi: exact decimal when it terminates within `digits`, else "p/q".
///  - truncations of lo and hi agree: that common prefix followed by "...",
///    which denotes [X, X + 10^-digits) and contains [lo, hi].
///  - otherwise "X +/- w" with [X - w, X + w] containing [lo, hi].
std::string render_decimal(const RigorousValue& v, int digits);

/// Smallest K whose p_K clears the tail-bound precondition.
std::size_t minimum_truncation();

}  // namespace eta_lab
