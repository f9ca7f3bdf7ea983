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
#include "eta_lab/rational.hpp"

#include <cstddef>

namespace eta_lab {

namespace {

BigInt pow10(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

}  // namespace

std::string to_fraction_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt floor_scaled(const BigRational& q, int digits) {
  BigInt n = q.get_num() * pow10(digits);
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

BigInt ceil_scaled(const BigRational& q, int digits) {
  BigInt n = q.get_num() * pow10(digits);
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::string scaled_to_decimal(const BigInt& v, int digits) {
  const bool negative = v < 0;
  std::string s = BigInt(abs(v)).get_str();
  const auto width = static_cast<std::size_t>(digits);
  if (s.size() <= width) s.insert(0, width + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - width, ".");
  return negative ? "-" + s : s;
}

std::string to_fixed(const BigRational& q, int digits) {
  // round(x) = sign(x) * floor(|x| + 1/2)
  const BigRational mag = abs(q);
  BigRational shifted = mag + BigRational(1, 2) / BigRational(pow10(digits));
  shifted.canonicalize();
  BigInt v = floor_scaled(shifted, digits);
  if (q < 0) v = -v;
  return scaled_to_decimal(v, digits);
}

}  // namespace eta_lab
