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
#include "eta_lab/signature.hpp"

#include <bit>
#include <optional>
#include <string>

#include "eta_lab/error.hpp"
#include "eta_lab/newform.hpp"

namespace eta_lab {

SignatureTable::SignatureTable(const DiscriminantTable& table, const PrimeTable& primes, std::uint64_t cap) {
  if (primes.size() < static_cast<std::size_t>(kernels::kWindow)) {
    throw InvalidArgument("SignatureTable: prime table must hold at least 32 primes");
  }
  const auto& k = kernels::active();
  window_.assign(primes.values().begin(), primes.values().begin() + kernels::kWindow);
  const std::size_t n = table.size();
  negative_.assign(n, 0);
  zero_.assign(n, 0);
  least_negative_.assign(n, 0);

  std::vector<std::int8_t> row(n);
  for (std::size_t i = 0; i < window_.size(); ++i) {
    const kernels::ResidueCharacter chi(window_[i]);
    k.character_row(chi, table.values(), row);
    k.accumulate_sign_bits(row, std::uint32_t{1} << i, negative_, zero_);
  }

  for (std::size_t j = 0; j < n; ++j) {
    const FundamentalDiscriminant d = table[j];
    std::optional<std::uint64_t> p;
    if (negative_[j] != 0) {
      p = window_[static_cast<std::size_t>(std::countr_zero(negative_[j]))];
    } else if (!d.is_trivial()) {
      p = found_prime(least_negative_prime(d, primes, cap));
    } else {
      continue;
    }
    if (!p || *p > cap) {
      throw CapExceededError("n(D) scan for D = " + std::to_string(d.value()) + " exceeded cap " +
                                 std::to_string(cap),
                             cap);
    }
    least_negative_[j] = static_cast<std::uint32_t>(*p);
  }
}

}  // namespace eta_lab
