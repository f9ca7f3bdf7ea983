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
#include <doctest.h>

#include <string>
#include <vector>

#include "eta_lab/constants.hpp"
#include "eta_lab/error.hpp"

using namespace eta_lab;

namespace {

BigRational q(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational decimal(const char* text) {
  const std::string s(text);
  const auto dot = s.find('.');
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
  BigRational r(BigInt(digits, 10), scale);
  r.canonicalize();
  return r;
}

const PrimeTable& primes() {
  static const PrimeTable table = PrimeTable::with_count(12000);
  return table;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("single-term partial sums") {
  CHECK(partial_sum(Series::big_theta, 1, primes()) == q(2, 3));
  CHECK(partial_sum(Series::alpha, 1, primes()) == q(2, 9));
  CHECK(partial_sum(Series::beta, 1, primes()) == q(1, 9));
  CHECK(partial_sum(Series::theta, 1, primes()) == q(8, 9));
  CHECK(partial_sum(Series::erdos, 3, primes()) == q(19, 8));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(partial_sum(Series::theta, 0, primes()), InvalidArgument);
  CHECK_THROWS_AS(partial_sum(Series::theta, 30, sieve_primes(50)), InvalidArgument);
  CHECK_THROWS_AS(tail_bound(Series::theta, 5, primes()), InvalidArgument);
  CHECK_NOTHROW(tail_bound(Series::theta, minimum_truncation(), primes()));
  CHECK(primes().nth(minimum_truncation()) >= 25);
  CHECK(primes().nth(minimum_truncation() - 1) < 25);
  CHECK(parse_series("Theta") == Series::big_theta);
  CHECK(!parse_series("gamma"));
}

TEST_CASE("partial sums increase strictly") {
  for (const Series s : kAllSeries) {
    const auto terms = series_terms(s, 300, primes());
    for (const auto& t : terms) CHECK(t > 0);
  }
}

TEST_CASE("tail bounds dominate the next thousand terms") {
  for (const Series s : kAllSeries) {
    for (const std::size_t k : {10u, 20u, 50u, 100u, 200u}) {
      const BigRational head = partial_sum(s, k, primes());
      const BigRational deeper = partial_sum(s, k + 1000, primes());
      const BigRational tail = tail_bound(s, k, primes());
      CHECK_MESSAGE(head <= deeper, series_name(s) << " K=" << k);
      CHECK_MESSAGE(deeper <= head + tail, series_name(s) << " K=" << k);
    }
  }
}

TEST_CASE("erdos tail at K = 20 and Theta tail at K = 100") {
  const BigRational erdos_tail = tail_bound(Series::erdos, 20, primes());
  CHECK(erdos_tail > 0);
  CHECK(erdos_tail < q(1, 10000));
  CHECK(partial_sum(Series::erdos, 10000, primes()) - partial_sum(Series::erdos, 20, primes()) <= erdos_tail);
  CHECK(tail_bound(Series::big_theta, 100, primes()) < BigRational(1, BigInt("1000000000000")));
}

TEST_CASE("tail bounds shrink with K") {
  for (const Series s : kAllSeries) {
    BigRational previous = tail_bound(s, 20, primes());
    for (std::size_t k = 21; k <= 200; ++k) {
      const BigRational current = tail_bound(s, k, primes());
      CHECK(current <= previous);
      previous = current;
    }
  }
}

TEST_CASE("enclosures nest when K doubles") {
  for (const Series s : kAllSeries) {
    for (const std::size_t k : {50u, 100u, 200u}) {
      const RigorousValue coarse = rigorous_constant(s, k, primes());
      const RigorousValue fine = rigorous_constant(s, 2 * k, primes());
      CHECK(coarse.contains(fine));
      CHECK(fine.width() <= coarse.width());
    }
  }
}

TEST_CASE("fold order does not change the sum") {
  for (const Series s : kAllSeries) {
    auto level = series_terms(s, 777, primes());
    BigRational left = 0;
    for (const auto& t : level) left += t;
    while (level.size() > 1) {
      std::vector<BigRational> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
      if (level.size() % 2) next.push_back(level.back());
      level.swap(next);
    }
    CHECK(left == level.front());
    CHECK(left == partial_sum(s, 777, primes()));
  }
}

TEST_CASE("alpha + beta partial sums telescope to 1 - prod") {
  for (const std::size_t k : {1u, 5u, 60u, 400u}) {
    BigRational product = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      const long p = static_cast<long>(primes().nth(j));
      product *= q(p + 2, 2 * (p + 1));
    }
    CHECK(partial_sum(Series::alpha, k, primes()) + partial_sum(Series::beta, k, primes()) == 1 - product);
  }
}

TEST_CASE("theta terms follow the sign probabilities") {
  const auto terms = series_terms(Series::theta, 50, primes());
  BigRational survive = 1;
  for (std::size_t k = 1; k <= 50; ++k) {
    const long p = static_cast<long>(primes().nth(k));
    const BigRational zero = q(1, (p + 1) * (p + 1));
    const BigRational nonzero = q(p * (p + 2), 2 * (p + 1) * (p + 1));
    CHECK(zero + 2 * nonzero == 1);
    CHECK(terms[k - 1] == p * nonzero * survive);
    survive *= zero + nonzero;
  }
}

TEST_CASE("published values at K = 1000") {
  const RigorousValue theta = rigorous_constant(Series::theta, 1000, primes());
  const RigorousValue big_theta = rigorous_constant(Series::big_theta, 1000, primes());
  const RigorousValue combined = combined_constant(1000, primes());
  CHECK(starts_with(render_decimal(theta, 10), "3.9750223902"));
  CHECK(starts_with(render_decimal(big_theta, 10), "4.9809473396"));
  CHECK(starts_with(render_decimal(combined, 14), "4.63255603509332"));
  CHECK(combined.width() < BigRational(1, BigInt("100000000000000")));
  CHECK(combined.lo < decimal("4.63255603509333"));
  CHECK(combined.hi > decimal("4.63255603509332"));
  const RigorousValue erdos = rigorous_constant(Series::erdos, 1000, primes());
  CHECK(starts_with(render_decimal(erdos, 4), "3.6746"));
}

TEST_CASE("combined constant and mu at K = 50") {
  const RigorousValue combined = combined_constant(50, primes());
  CHECK(combined.contains(combined_constant(1000, primes())));
  CHECK(combined.width() > combined_constant(1000, primes()).width());
  const RigorousValue mu = mu_constant(50, primes());
  CHECK(mu.lo < decimal("0.6576"));
  CHECK(mu.hi > decimal("0.6575"));
  CHECK(starts_with(render_decimal(mu_constant(1000, primes()), 4), "0.6575"));
}

TEST_CASE("render_decimal forms") {
  RigorousValue exact;
  exact.lo = exact.hi = q(1, 4);
  CHECK(render_decimal(exact, 2) == "0.25");
  CHECK(render_decimal(exact, 4) == "0.2500");
  exact.lo = exact.hi = q(1, 3);
  CHECK(render_decimal(exact, 5) == "1/3");
  RigorousValue tight;
  tight.lo = decimal("1.23456");
  tight.hi = decimal("1.23457");
  CHECK(render_decimal(tight, 4) == "1.2345...");
  RigorousValue negative;
  negative.lo = decimal("-1.23457");
  negative.hi = decimal("-1.23456");
  CHECK(render_decimal(negative, 4) == "-1.2345...");
  RigorousValue wide;
  wide.lo = decimal("1.2");
  wide.hi = decimal("1.4");
  CHECK(render_decimal(wide, 3) == "1.300 +/- 0.100");
  CHECK_THROWS_AS(render_decimal(wide, 0), InvalidArgument);
}
