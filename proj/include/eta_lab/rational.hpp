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

#include <gmpxx.h>

#include <string>

namespace eta_lab {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_fraction_string(const BigRational& q);

/// floor(q * 10^digits) and ceil(q * 10^digits).
BigInt floor_scaled(const BigRational& q, int digits);
BigInt ceil_scaled(const BigRational& q, int digits);

/// Decimal rendering of v / 10^digits with exactly `digits` fractional digits.
std::string scaled_to_decimal(const BigInt& v, int digits);

/// q rounded to `digits` fractional digits, ties away from zero.
std::string to_fixed(const BigRational& q, int digits);

}  // namespace eta_lab
