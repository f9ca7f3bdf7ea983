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
#include "eta_lab/kronecker.hpp"

#include <cassert>
#include <string>

#include "eta_lab/error.hpp"

namespace eta_lab {

namespace {

// (2/n) for odd n, from n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// Cohen, A Course in Computational Algebraic Number Theory, Alg. 1.4.10,
// with the first argument reduced into range once the second is odd.
Sign kronecker(std::int64_t d, std::uint64_t n) {
  if (n == 0) {
    throw InvalidArgument("kronecker: lower argument must be >= 1");
  }
  int result = 1;
  if ((n & 1) == 0) {
    if ((d & 1) == 0) return Sign::zero;
    int v = 0;
    while ((n & 1) == 0) {
      n >>= 1;
      ++v;
    }
    if (v & 1) result = kTwoTable[d & 7];
  }
  // n odd from here on; (d/n) is the Jacobi symbol.
  std::uint64_t a = static_cast<std::uint64_t>(floor_mod(d, static_cast<std::int64_t>(n)));
  while (a != 0) {
    int v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) result *= kTwoTable[n & 7];
    if ((a & n & 2) != 0) result = -result;
    const std::uint64_t r = n % a;
    n = a;
    a = r;
  }
  if (n != 1) return Sign::zero;
  return result > 0 ? Sign::positive : Sign::negative;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp != 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Sign legendre_oracle(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime_trial(p)) {
    throw InvalidArgument("legendre_oracle: " + std::to_string(p) + " is not an odd prime");
  }
  const auto r = static_cast<std::uint64_t>(floor_mod(a, static_cast<std::int64_t>(p)));
  if (r == 0) return Sign::zero;
  const std::uint64_t e = pow_mod(r, (p - 1) / 2, p);
  assert(e == 1 || e == p - 1);
  return e == 1 ? Sign::positive : Sign::negative;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  if (p == 2 || !is_prime_trial(p)) {
    throw InvalidArgument("least_nonresidue: " + std::to_string(p) + " is not an odd prime");
  }
  for (std::uint64_t n = 2;; ++n) {
    if (pow_mod(n, (p - 1) / 2, p) == p - 1) {
      assert(is_prime_trial(n));
      return n;
    }
  }
}

}  // namespace eta_lab
