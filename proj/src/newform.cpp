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
#include "eta_lab/newform.hpp"

#include <string>

#include "eta_lab/bernoulli.hpp"
#include "eta_lab/error.hpp"
#include "eta_lab/kronecker.hpp"

namespace eta_lab {

namespace {

void check_cap(std::uint64_t cap, const PrimeTable& primes) {
  if (cap < 2) throw InvalidArgument("eta: cap must be >= 2");
  if (cap > primes.limit()) {
    throw InvalidArgument("eta: cap " + std::to_string(cap) + " exceeds prime table limit " +
                          std::to_string(primes.limit()));
  }
}

template <typename SignAt>
EtaResult first_negative(const PrimeTable& primes, std::uint64_t cap, SignAt sign_at) {
  for (const std::uint32_t p : primes.values()) {
    if (p > cap) break;
    if (sign_at(p) == Sign::negative) return Found{p};
  }
  return CapExceeded{cap};
}

}  // namespace

NewformPair::NewformPair(FundamentalDiscriminant d1, FundamentalDiscriminant d2) : d1_(d1), d2_(d2) {
  if (d1.is_trivial() && d2.is_trivial()) {
    throw InvalidArgument("NewformPair: (1, 1) is excluded, both characters principal");
  }
}

BigInt sigma_coefficient(const NewformPair& pair, unsigned k, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("sigma_coefficient: n must be >= 1");
  if (k == 0) throw InvalidArgument("sigma_coefficient: k must be >= 1");
  const std::int64_t d1 = pair.first().value();
  const std::int64_t d2 = pair.second().value();
  BigInt total = 0;
  BigInt power;
  const auto add_divisor = [&](std::uint64_t d) {
    const int c = to_int(kronecker(d1, n / d)) * to_int(kronecker(d2, d));
    if (c == 0) return;
    mpz_ui_pow_ui(power.get_mpz_t(), d, k - 1);
    if (c > 0) total += power; else total -= power;
  };
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    add_divisor(d);
    if (d * d != n) add_divisor(n / d);
  }
  return total;
}

Sign sigma_sign_at_prime(const NewformPair& pair, std::uint64_t p) {
  if (pair.second().value() % static_cast<std::int64_t>(p) == 0) {
    return kronecker(pair.first().value(), p);
  }
  return kronecker(pair.second().value(), p);
}

EtaResult eta(const NewformPair& pair, const PrimeTable& primes, std::uint64_t cap) {
  check_cap(cap, primes);
  if (pair.second().is_trivial()) return Never{};
  return first_negative(primes, cap, [&](std::uint64_t p) { return sigma_sign_at_prime(pair, p); });
}

EtaResult eta(const NewformPair& pair, std::uint64_t cap) {
  if (cap <= default_primes().limit()) return eta(pair, default_primes(), cap);
  return eta(pair, PrimeTable(cap), cap);
}

EtaResult least_negative_prime(FundamentalDiscriminant d, const PrimeTable& primes, std::uint64_t cap) {
  check_cap(cap, primes);
  if (d.is_trivial()) return Never{};
  return first_negative(primes, cap, [&](std::uint64_t p) { return kronecker(d.value(), p); });
}

EtaResult least_negative_prime(FundamentalDiscriminant d, std::uint64_t cap) {
  if (cap <= default_primes().limit()) return least_negative_prime(d, default_primes(), cap);
  return least_negative_prime(d, PrimeTable(cap), cap);
}

bool is_valid_newform_triple(const NewformPair& pair, int k) {
  if (k < 1) return false;
  const bool product_positive = (pair.first().value() > 0) == (pair.second().value() > 0);
  const bool k_even = k % 2 == 0;
  if (product_positive != k_even) return false;
  return !(k == 2 && pair.first().is_trivial() && pair.second().is_trivial());
}

QExpansion q_expansion(const NewformPair& pair, int k, std::size_t terms) {
  if (k < 1) throw InvalidArgument("q_expansion: weight must be >= 1");
  if (terms == 0) throw InvalidArgument("q_expansion: need at least one term");
  if (!is_valid_newform_triple(pair, k)) {
    throw InvalidArgument("q_expansion: chi1 chi2 (-1) != (-1)^k for D1 = " +
                          std::to_string(pair.first().value()) + ", D2 = " +
                          std::to_string(pair.second().value()) + ", k = " + std::to_string(k));
  }
  QExpansion e;
  e.weight = static_cast<unsigned>(k);
  if (pair.first().is_trivial()) {
    e.constant_term = l_value_at_negative(e.weight, pair.second()) / 2;
    e.constant_term.canonicalize();
  }
  e.coefficients.reserve(terms);
  for (std::uint64_t n = 1; n <= terms; ++n) e.coefficients.push_back(sigma_coefficient(pair, e.weight, n));
  return e;
}

}  // namespace eta_lab
