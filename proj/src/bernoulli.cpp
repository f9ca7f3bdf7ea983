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
#include "eta_lab/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "eta_lab/error.hpp"
#include "eta_lab/kronecker.hpp"

namespace eta_lab {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigRational bernoulli_number(unsigned n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0, memoised across calls.
  static std::mutex mutex;
  static std::vector<BigRational> cache{BigRational(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const auto m = static_cast<unsigned>(cache.size());
    BigRational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * cache[j];
    BigRational b = -acc / BigRational(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

BigRational bernoulli_polynomial(unsigned n, const BigRational& x) {
  BigRational result = 0;
  BigRational power = 1;  // x^(n-j), built from j = n downward
  for (unsigned j = n + 1; j-- > 0;) {
    result += BigRational(binomial(n, j)) * bernoulli_number(j) * power;
    power *= x;
  }
  result.canonicalize();
  return result;
}

BigRational generalized_bernoulli(unsigned k, FundamentalDiscriminant d) {
  if (k == 0) throw InvalidArgument("generalized_bernoulli: k must be >= 1");
  const std::uint64_t f = d.magnitude();
  BigRational sum = 0;
  for (std::uint64_t a = 1; a <= f; ++a) {
    const int chi = to_int(kronecker(d.value(), a));
    if (chi == 0) continue;
    BigRational x(static_cast<unsigned long>(a), static_cast<unsigned long>(f));
    x.canonicalize();
    const BigRational b = bernoulli_polynomial(k, x);
    if (chi > 0) sum += b; else sum -= b;
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), f, k - 1);
  BigRational result = sum * BigRational(scale);
  result.canonicalize();
  return result;
}

BigRational l_value_at_negative(unsigned k, FundamentalDiscriminant d) {
  if (k == 0) throw InvalidArgument("l_value_at_negative: k must be >= 1");
  if (k == 1 && d.is_trivial()) {
    throw InvalidArgument("l_value_at_negative: k = 1 with the trivial character is not supported");
  }
  BigRational r = -generalized_bernoulli(k, d) / BigRational(k);
  r.canonicalize();
  return r;
}

}  // namespace eta_lab
