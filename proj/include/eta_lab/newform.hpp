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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "eta_lab/discriminant.hpp"
#include "eta_lab/primes.hpp"
#include "eta_lab/rational.hpp"
#include "eta_lab/sign.hpp"

namespace eta_lab {

inline constexpr std::uint64_t kDefaultCap = 100000;

/// Characters (chi_{D1}, chi_{D2}) of the Eisenstein newform E(chi_1, chi_2, k).
/// The level |D1 * D2| is derived, not stored. (1, 1) is rejected.
class NewformPair {
 public:
  NewformPair(FundamentalDiscriminant d1, FundamentalDiscriminant d2);
  NewformPair(std::int64_t d1, std::int64_t d2)
      : NewformPair(FundamentalDiscriminant(d1), FundamentalDiscriminant(d2)) {}

  FundamentalDiscriminant first() const noexcept { return d1_; }
  FundamentalDiscriminant second() const noexcept { return d2_; }

 private:
  FundamentalDiscriminant d1_;
  FundamentalDiscriminant d2_;
};

struct Found {
  std::uint64_t prime;
  friend bool operator==(const Found&, const Found&) = default;
};
struct Never {
  friend bool operator==(const Never&, const Never&) = default;
};
struct CapExceeded {
  std::uint64_t cap;
  friend bool operator==(const CapExceeded&, const CapExceeded&) = default;
};

/// Outcome of a first-negative-prime scan.
using EtaResult = std::variant<Found, Never, CapExceeded>;

inline std::optional<std::uint64_t> found_prime(const EtaResult& r) {
  if (const auto* f = std::get_if<Found>(&r)) return f->prime;
  return std::nullopt;
}

/// sigma^{k-1}_{chi1,chi2}(n) = sum_{d | n} chi1(n/d) chi2(d) d^{k-1}, exactly.
BigInt sigma_coefficient(const NewformPair& pair, unsigned k, std::uint64_t n);

/// Sign of the coefficient at a prime p, for any weight k >= 2:
/// a(p) = chi1(p) + chi2(p) p^{k-1}, so the second term decides unless p | D2.
Sign sigma_sign_at_prime(const NewformPair& pair, std::uint64_t p);

/// eta(D1, D2): least prime p <= cap with negative coefficient sign. The scan
/// uses the primes of `primes`, so `cap` may not exceed `primes.limit()`.
/// Weight plays no part for k >= 2.
EtaResult eta(const NewformPair& pair, const PrimeTable& primes, std::uint64_t cap = kDefaultCap);
EtaResult eta(const NewformPair& pair, std::uint64_t cap = kDefaultCap);

/// n(D): least prime p <= cap with chi_D(p) = -1. Never iff D = 1.
EtaResult least_negative_prime(FundamentalDiscriminant d, const PrimeTable& primes,
                               std::uint64_t cap = kDefaultCap);
EtaResult least_negative_prime(FundamentalDiscriminant d, std::uint64_t cap = kDefaultCap);

/// chi1 chi2 (-1) = (-1)^k, k >= 1, and not (D1, D2, k) = (1, 1, 2).
bool is_valid_newform_triple(const NewformPair& pair, int k);

struct QExpansion {
  unsigned weight = 0;
  BigRational constant_term;
  std::vector<BigInt> coefficients;  // a_1 .. a_M
};

/// E(chi1, chi2, k) = delta(chi1)/2 * L(1-k, chi2) + sum_n sigma(n) q^n, truncated at q^M.
QExpansion q_expansion(const NewformPair& pair, int k, std::size_t terms);

}  // namespace eta_lab
