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

#include "eta_lab/discriminant.hpp"
#include "eta_lab/rational.hpp"

namespace eta_lab {

/// Bernoulli number B_n with B_1 = -1/2.
BigRational bernoulli_number(unsigned n);

/// Bernoulli polynomial B_n(x).
BigRational bernoulli_polynomial(unsigned n, const BigRational& x);

/// B_{k,chi_D} = f^{k-1} * sum_{a=1..f} chi_D(a) B_k(a/f), f = |D|.
/// For D = 1 this gives B_k(1), so B_{1,1} = +1/2.
BigRational generalized_bernoulli(unsigned k, FundamentalDiscriminant d);

/// L(1-k, chi_D) = -B_{k,chi_D} / k. Rejects (k = 1, D = 1).
BigRational l_value_at_negative(unsigned k, FundamentalDiscriminant d);

}  // namespace eta_lab
