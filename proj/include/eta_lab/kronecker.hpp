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

#include "eta_lab/sign.hpp"

namespace eta_lab {

/// Kronecker symbol (d/n) for n >= 1. n = 0 is rejected.
Sign kronecker(std::int64_t d, std::uint64_t n);

/// Legendre symbol by Euler's criterion. Independent of `kronecker`; used as
/// a cross-check. Throws unless p is an odd prime.
Sign legendre_oracle(std::int64_t a, std::uint64_t p);

/// Classical least quadratic non-residue n_1(p) for an odd prime p.
std::uint64_t least_nonresidue(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime_trial(std::uint64_t n);

}  // namespace eta_lab
