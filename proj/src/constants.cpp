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
#include "eta_lab/constants.hpp"

#include <string>

#include "eta_lab/error.hpp"

namespace eta_lab {

namespace {

constexpr std::uint64_t kNaguraThreshold = 25;

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

// term_k = head(p_k) * prod_{j<k} step(p_j)
BigRational head(Series s, long p) {
  switch (s) {
    case Series::theta: return q(p * p * (p + 2), 2 * (p + 1) * (p + 1));
    case Series::big_theta: return q(p * p, 2 * (p + 1));
    case Series::alpha: return q(p * p, 2 * (p + 1) * (p + 1));
    case Series::beta: return q(p, 2 * (p + 1) * (p + 1));
    case Series::erdos: return q(p);
  }
  return 0;
}

BigRational step(Series s, long p) {
  switch (s) {
    case Series::theta: return q(2 + p * (p + 2), 2 * (p + 1) * (p + 1));
    case Series::erdos: return q(1, 2);
    default: return q(p + 2, 2 * (p + 1));
  }
}

void require_primes(const PrimeTable& primes, std::size_t count, const char* who) {
  if (count == 0) throw InvalidArgument(std::string(who) + ": truncation must be >= 1");
  if (primes.size() < count) {
    throw InvalidArgument(std::string(who) + ": prime table holds " + std::to_string(primes.size()) +
                          " primes, need " + std::to_string(count));
  }
}

// Sum of terms 1..count, and term count+1 when the table has it.
struct Accumulated {
  BigRational sum;
  BigRational next_term;
};

Accumulated accumulate(Series s, std::size_t count, const PrimeTable& primes, bool want_next) {
  const auto ps = primes.values();
  // erdos: p_k / 2^k, so the empty product starts at 1/2.
  BigRational product = s == Series::erdos ? q(1, 2) : q(1);
  Accumulated out;
  out.sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const long p = ps[i];
    out.sum += head(s, p) * product;
    product *= step(s, p);
  }
  if (want_next) out.next_term = head(s, ps[count]) * product;
  return out;
}

PrimeTable table_for(std::size_t count) { return PrimeTable::with_count(count + 1); }

}  // namespace

std::string_view series_name(Series s) {
  switch (s) {
    case Series::theta: return "theta";
    case Series::big_theta: return "Theta";
    case Series::alpha: return "alpha";
    case Series::beta: return "beta";
    case Series::erdos: return "erdos";
  }
  return "?";
}

std::optional<Series> parse_series(std::string_view name) {
  for (const Series s : kAllSeries) {
    if (series_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<BigRational> series_terms(Series s, std::size_t count, const PrimeTable& primes) {
  require_primes(primes, count, "series_terms");
  const auto ps = primes.values();
  BigRational product = s == Series::erdos ? q(1, 2) : q(1);
  std::vector<BigRational> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long p = ps[i];
    terms.push_back(head(s, p) * product);
    product *= step(s, p);
  }
  return terms;
}

BigRational partial_sum(Series s, std::size_t count, const PrimeTable& primes) {
  require_primes(primes, count, "partial_sum");
  return accumulate(s, count, primes, false).sum;
}

BigRational tail_bound(Series s, std::size_t count, const PrimeTable& primes) {
  require_primes(primes, count + 1, "tail_bound");
  const std::uint64_t pk = primes.nth(count);
  if (pk < kNaguraThreshold) {
    throw InvalidArgument("tail_bound: p_K = " + std::to_string(pk) +
                          " < 25; raise K to at least " + std::to_string(minimum_truncation()));
  }
  const Accumulated acc = accumulate(s, count, primes, true);
  BigRational ratio;
  if (s == Series::erdos) {
    ratio = q(3, 5);
  } else {
    const long next = static_cast<long>(primes.nth(count + 1));
    ratio = q(36, 25) * (q(1, 2) + q(1, 2 * (next + 1)));
  }
  BigRational bound = acc.next_term / (1 - ratio);
  bound.canonicalize();
  return bound;
}

BigRational RigorousValue::midpoint() const {
  BigRational m = (lo + hi) / 2;
  m.canonicalize();
  return m;
}

RigorousValue rigorous_constant(Series s, std::size_t count, const PrimeTable& primes) {
  RigorousValue v;
  v.name = std::string(series_name(s));
  v.truncation = count;
  v.lo = partial_sum(s, count, primes);
  v.hi = v.lo + tail_bound(s, count, primes);
  return v;
}

RigorousValue rigorous_constant(Series s, std::size_t count) {
  return rigorous_constant(s, count, table_for(count));
}

RigorousValue combined_constant(std::size_t count, const PrimeTable& primes) {
  const RigorousValue big_theta = rigorous_constant(Series::big_theta, count, primes);
  const RigorousValue alpha = rigorous_constant(Series::alpha, count, primes);
  const RigorousValue beta = rigorous_constant(Series::beta, count, primes);
  if (beta.lo < 0 || beta.hi > 1) {
    throw std::logic_error("combined_constant: beta enclosure outside [0, 1]");
  }
  RigorousValue v;
  v.name = "combined";
  v.truncation = count;
  v.lo = big_theta.lo * (1 - beta.hi) + alpha.lo;
  v.hi = big_theta.hi * (1 - beta.lo) + alpha.hi;
  return v;
}

RigorousValue combined_constant(std::size_t count) { return combined_constant(count, table_for(count)); }

RigorousValue mu_constant(std::size_t count, const PrimeTable& primes) {
  const RigorousValue combined = combined_constant(count, primes);
  const RigorousValue theta = rigorous_constant(Series::theta, count, primes);
  RigorousValue v;
  v.name = "mu";
  v.truncation = count;
  v.lo = combined.lo - theta.hi;
  v.hi = combined.hi - theta.lo;
  return v;
}

std::string render_decimal(const RigorousValue& v, int digits) {
  if (digits < 1) throw InvalidArgument("render_decimal: digits must be >= 1");
  if (v.lo == v.hi) {
    const BigInt f = floor_scaled(v.lo, digits);
    if (f == ceil_scaled(v.lo, digits)) return scaled_to_decimal(f, digits);
    return to_fraction_string(v.lo);
  }
  if (v.lo >= 0) {
    const BigInt a = floor_scaled(v.lo, digits);
    if (a == floor_scaled(v.hi, digits)) return scaled_to_decimal(a, digits) + "...";
  } else if (v.hi <= 0) {
    const BigInt a = floor_scaled(-v.hi, digits);
    if (a == floor_scaled(-v.lo, digits)) return "-" + scaled_to_decimal(a, digits) + "...";
  }
  // X = mid rounded to digits; w = max distance to an endpoint, rounded up.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigRational shifted = v.midpoint() * BigRational(scale) + BigRational(1, 2);
  shifted.canonicalize();
  BigInt x;
  mpz_fdiv_q(x.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  BigRational xq(x, scale);
  xq.canonicalize();
  BigRational radius = v.hi - xq;
  if (xq - v.lo > radius) radius = xq - v.lo;
  const BigInt w = ceil_scaled(radius, digits);
  return scaled_to_decimal(x, digits) + " +/- " + scaled_to_decimal(w, digits);
}

std::size_t minimum_truncation() {
  const PrimeTable small(100);
  for (std::size_t k = 1; k <= small.size(); ++k) {
    if (small.nth(k) >= kNaguraThreshold) return k;
  }
  return small.size();
}

}  // namespace eta_lab
