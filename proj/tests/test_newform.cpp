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

#include <random>
#include <vector>

#include "eta_lab/bernoulli.hpp"
#include "eta_lab/error.hpp"
#include "eta_lab/kronecker.hpp"
#include "eta_lab/newform.hpp"
#include "eta_lab/oracle.hpp"

using namespace eta_lab;

namespace {

BigRational q(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

// Divisor sum straight from the definition, every d in 1..n tested.
BigInt divisor_sum(std::int64_t d1, std::int64_t d2, unsigned k, std::uint64_t n) {
  BigInt total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), d, k - 1);
    total += to_int(kronecker(d1, n / d)) * to_int(kronecker(d2, d)) * power;
  }
  return total;
}

// B_{k,chi} from the generating function sum_a chi(a) t e^{at} / (e^{ft} - 1)
// expanded as a power series in t with exact coefficients.
BigRational bernoulli_by_series(unsigned k, std::int64_t d) {
  const auto f = static_cast<long>(d < 0 ? -d : d);
  const unsigned order = k + 1;
  std::vector<BigRational> factorial(order + 2, 1);
  for (unsigned i = 1; i < factorial.size(); ++i) factorial[i] = factorial[i - 1] * i;
  // (e^{ft} - 1)/t = sum_{i>=0} f^{i+1} t^i / (i+1)!; invert that series.
  std::vector<BigRational> den(order + 1);
  BigRational fp = f;
  for (unsigned i = 0; i <= order; ++i, fp *= f) den[i] = fp / factorial[i + 1];
  std::vector<BigRational> inv(order + 1, 0);
  inv[0] = 1 / den[0];
  for (unsigned n = 1; n <= order; ++n) {
    BigRational s = 0;
    for (unsigned i = 1; i <= n; ++i) s += den[i] * inv[n - i];
    inv[n] = -s / den[0];
  }
  // Numerator sum_a chi(a) e^{at}.
  std::vector<BigRational> num(order + 1, 0);
  for (long a = 1; a <= f; ++a) {
    const int chi = to_int(kronecker(d, static_cast<std::uint64_t>(a)));
    if (chi == 0) continue;
    BigRational ap = 1;
    for (unsigned i = 0; i <= order; ++i, ap *= a) num[i] += chi * ap / factorial[i];
  }
  BigRational coeff = 0;
  for (unsigned i = 0; i <= k; ++i) coeff += num[i] * inv[k - i];
  BigRational r = coeff * factorial[k];
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("NewformPair rejects the doubly trivial pair and non-fundamental input") {
  CHECK_THROWS_AS(NewformPair(1, 1), InvalidArgument);
  CHECK_THROWS_AS(NewformPair(9, -3), InvalidArgument);
  CHECK_NOTHROW(NewformPair(1, -4));
  CHECK_NOTHROW(NewformPair(-3, 1));
}

TEST_CASE("sigma_coefficient examples") {
  CHECK(sigma_coefficient(NewformPair(1, -4), 3, 3) == -8);
  for (const auto& [a, b] : {std::pair{5, -3}, std::pair{1, -4}, std::pair{-8, 12}}) {
    for (unsigned k = 1; k <= 6; ++k) CHECK(sigma_coefficient(NewformPair(a, b), k, 1) == 1);
  }
  const NewformPair p(5, -3);
  CHECK(sigma_coefficient(p, 2, 6) == sigma_coefficient(p, 2, 2) * sigma_coefficient(p, 2, 3));
  CHECK(sigma_coefficient(p, 2, 6) == divisor_sum(5, -3, 2, 6));
  CHECK_THROWS_AS(sigma_coefficient(p, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(sigma_coefficient(p, 0, 5), InvalidArgument);
}

TEST_CASE("sigma_coefficient equals the definitional divisor sum") {
  const std::vector<std::int64_t> ds = oracle::fundamentals(40);
  int failures = 0;
  for (const std::int64_t a : ds) {
    for (const std::int64_t b : ds) {
      if (a == 1 && b == 1) continue;
      for (unsigned k = 1; k <= 4; ++k) {
        for (std::uint64_t n = 1; n <= 60; ++n) failures += sigma_coefficient(NewformPair(a, b), k, n) != divisor_sum(a, b, k, n);
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("sigma_sign_at_prime examples") {
  CHECK(sigma_sign_at_prime(NewformPair(5, -3), 2) == Sign::negative);
  CHECK(sigma_sign_at_prime(NewformPair(-3, 8), 2) == Sign::negative);
  CHECK(sigma_sign_at_prime(NewformPair(-4, -8), 3) == Sign::positive);
  CHECK(sigma_sign_at_prime(NewformPair(-4, -8), 2) == Sign::zero);
}

TEST_CASE("sign rule matches coefficient sign on random pairs") {
  const std::vector<std::int64_t> ds = oracle::fundamentals(1000);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  int failures = 0;
  for (int i = 0; i < 10000;) {
    const std::int64_t a = ds[pick(rng)], b = ds[pick(rng)];
    if (a == 1 && b == 1) continue;
    ++i;
    const NewformPair pair(a, b);
    for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      for (unsigned k = 2; k <= 6; ++k) failures += sign_of(sigma_coefficient(pair, k, p)) != sigma_sign_at_prime(pair, p);
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("multiplicativity and the prime-power recursion") {
  int failures = 0;
  for (const auto& [a, b] : {std::pair{5, -3}, std::pair{1, -4}, std::pair{-7, 13}, std::pair{8, 1}}) {
    const NewformPair pair(a, b);
    for (unsigned k = 2; k <= 3; ++k) {
      for (std::uint64_t m = 2; m <= 200; m += 3) {
        for (std::uint64_t n = 2; n <= 200; ++n) {
          if (std::gcd(m, n) != 1) continue;
          failures += sigma_coefficient(pair, k, m * n) != sigma_coefficient(pair, k, m) * sigma_coefficient(pair, k, n);
        }
      }
      for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) {
        const int chi = to_int(kronecker(a, p)) * to_int(kronecker(b, p));
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k - 1);
        std::uint64_t prev = 1, cur = p;
        for (unsigned r = 1; r <= 5; ++r) {
          const BigInt next = sigma_coefficient(pair, k, p) * sigma_coefficient(pair, k, cur) -
                              chi * pk * sigma_coefficient(pair, k, prev);
          failures += next != divisor_sum(a, b, k, cur * p);
          prev = cur;
          cur *= p;
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("eta examples") {
  CHECK(found_prime(eta(NewformPair(5, -3))) == 2u);
  CHECK(found_prime(eta(NewformPair(-4, -8))) == 5u);
  CHECK(std::holds_alternative<Never>(eta(NewformPair(-3, 1))));
  CHECK(found_prime(eta(NewformPair(5, 33))) == 3u);
}

TEST_CASE("eta reports a cap that is too small") {
  // Sign at 2 and 3 is 0 or +1 for (-4, -8); the first -1 is at 5.
  const EtaResult r = eta(NewformPair(-4, -8), 3);
  REQUIRE(std::holds_alternative<CapExceeded>(r));
  CHECK(std::get<CapExceeded>(r).cap == 3);
  CHECK_THROWS_AS(eta(NewformPair(5, -3), sieve_primes(100), 1000), InvalidArgument);
}

TEST_CASE("eta soundness and the one-sided decomposition facts") {
  const std::vector<std::int64_t> ds = oracle::fundamentals(10000);
  int failures = 0;
  for (const std::int64_t a : ds) {
    for (const std::int64_t b : ds) {
      const auto ma = static_cast<std::uint64_t>(std::abs(a)), mb = static_cast<std::uint64_t>(std::abs(b));
      if (ma * mb > 10000 || (a == 1 && b == 1)) continue;
      const NewformPair pair(a, b);
      const EtaResult r = eta(pair);
      if (b == 1) {
        failures += !std::holds_alternative<Never>(r);
        continue;
      }
      const auto p = found_prime(r);
      if (!p) {
        ++failures;
        continue;
      }
      failures += *p != oracle::eta_by_scan(a, b);
      if (b % static_cast<std::int64_t>(*p) != 0) {
        failures += found_prime(least_negative_prime(FundamentalDiscriminant(b))) != *p;
      } else if (a != 1) {
        failures += *found_prime(least_negative_prime(FundamentalDiscriminant(a))) > *p;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("least_negative_prime examples and exhaustive scan") {
  CHECK(found_prime(least_negative_prime(FundamentalDiscriminant(-3))) == 2u);
  CHECK(found_prime(least_negative_prime(FundamentalDiscriminant(8))) == 3u);
  CHECK(found_prime(least_negative_prime(FundamentalDiscriminant(-8))) == 5u);
  CHECK(std::holds_alternative<Never>(least_negative_prime(FundamentalDiscriminant(1))));
  int failures = 0;
  for (const std::int64_t d : oracle::fundamentals(500)) {
    if (d == 1) continue;
    failures += found_prime(least_negative_prime(FundamentalDiscriminant(d))) != oracle::least_negative_by_scan(d);
  }
  CHECK(failures == 0);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == q(-1, 2));
  CHECK(bernoulli_number(2) == q(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == q(-1, 30));
  CHECK(bernoulli_number(12) == q(-691, 2730));
  CHECK(bernoulli_polynomial(3, q(1, 4)) == q(3, 64));
  CHECK(bernoulli_polynomial(3, q(3, 4)) == q(-3, 64));
}

TEST_CASE("generalized Bernoulli examples") {
  CHECK(generalized_bernoulli(1, FundamentalDiscriminant(-4)) == q(-1, 2));
  CHECK(generalized_bernoulli(3, FundamentalDiscriminant(-4)) == q(3, 2));
  CHECK(generalized_bernoulli(1, FundamentalDiscriminant(1)) == q(1, 2));
  CHECK(generalized_bernoulli(1, FundamentalDiscriminant(-3)) == q(-1, 3));
  CHECK(generalized_bernoulli(2, FundamentalDiscriminant(5)) == q(4, 5));
}

TEST_CASE("generalized Bernoulli agrees with the generating function") {
  for (const std::int64_t d : {1, -3, -4, 5, -7, 8, -8, 12, -15, 13, -20, 21, 24}) {
    for (unsigned k = 1; k <= 7; ++k) {
      CHECK_MESSAGE(generalized_bernoulli(k, FundamentalDiscriminant(d)) == bernoulli_by_series(k, d), "D=" << d << " k=" << k);
    }
  }
}

TEST_CASE("generalized Bernoulli vanishes on the wrong parity") {
  // chi(-1) = sign(D); B_{k,chi} = 0 when chi(-1) != (-1)^k, apart from k = 1 with the trivial character.
  for (const std::int64_t d : oracle::fundamentals(60)) {
    for (unsigned k = 1; k <= 6; ++k) {
      if (d == 1 && k == 1) continue;
      const bool even_char = d > 0;
      if (even_char != (k % 2 == 0)) CHECK(generalized_bernoulli(k, FundamentalDiscriminant(d)) == 0);
    }
  }
}

TEST_CASE("L-values at negative integers") {
  CHECK(l_value_at_negative(1, FundamentalDiscriminant(-4)) == q(1, 2));
  CHECK(l_value_at_negative(3, FundamentalDiscriminant(-4)) == q(-1, 2));
  CHECK(l_value_at_negative(2, FundamentalDiscriminant(5)) == -generalized_bernoulli(2, FundamentalDiscriminant(5)) / 2);
  CHECK(l_value_at_negative(2, FundamentalDiscriminant(1)) == q(-1, 12));
  CHECK_THROWS_AS(l_value_at_negative(1, FundamentalDiscriminant(1)), InvalidArgument);
}

TEST_CASE("triple validity") {
  CHECK(is_valid_newform_triple(NewformPair(-3, -4), 2));
  CHECK_FALSE(is_valid_newform_triple(NewformPair(1, -4), 2));
  CHECK(is_valid_newform_triple(NewformPair(1, -4), 3));
  CHECK(is_valid_newform_triple(NewformPair(1, 5), 2));
  CHECK_FALSE(is_valid_newform_triple(NewformPair(1, 5), 0));
}

TEST_CASE("q-expansion examples") {
  const QExpansion e = q_expansion(NewformPair(1, -4), 3, 3);
  CHECK(e.constant_term == q(-1, 4));
  CHECK(e.coefficients == std::vector<BigInt>{1, 1, -8});
  const QExpansion f = q_expansion(NewformPair(-3, -4), 2, 1);
  CHECK(f.constant_term == 0);
  CHECK(f.coefficients == std::vector<BigInt>{1});
  const QExpansion g = q_expansion(NewformPair(1, -3), 1, 2);
  CHECK(g.constant_term == l_value_at_negative(1, FundamentalDiscriminant(-3)) / 2);
  CHECK(g.constant_term == q(1, 6));
  CHECK(g.coefficients == std::vector<BigInt>{1, to_int(kronecker(-3, 2)) + 1});
  CHECK_THROWS_AS(q_expansion(NewformPair(1, -4), 2, 3), InvalidArgument);
  CHECK_THROWS_AS(q_expansion(NewformPair(1, -4), 3, 0), InvalidArgument);
}

TEST_CASE("q-expansion invariants") {
  for (const auto& [a, b] : {std::pair{1, 5}, std::pair{-3, -4}, std::pair{5, 12}, std::pair{1, -7}}) {
    const NewformPair pair(a, b);
    for (int k = 1; k <= 6; ++k) {
      if (!is_valid_newform_triple(pair, k)) continue;
      const QExpansion e = q_expansion(pair, k, 12);
      CHECK(e.coefficients.front() == 1);
      if (a != 1) CHECK(e.constant_term == 0);
    }
  }
}
