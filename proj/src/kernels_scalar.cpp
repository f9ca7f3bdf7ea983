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
#include <bit>
#include <cassert>

#include "eta_lab/kernels.hpp"

namespace eta_lab::kernels::scalar {

void character_row(const ResidueCharacter& chi, std::span<const std::int32_t> ds, std::span<std::int8_t> out) {
  assert(out.size() >= ds.size());
  const auto table = chi.table();
  const auto m = static_cast<std::int64_t>(chi.modulus());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::int64_t r = ds[i] % m;
    if (r < 0) r += m;
    out[i] = static_cast<std::int8_t>(table[static_cast<std::size_t>(r)]);
  }
}

SignTally tally_signs(std::span<const std::int8_t> row) {
  SignTally t;
  for (const std::int8_t s : row) {
    if (s < 0) ++t.negative;
    else if (s == 0) ++t.zero;
    else ++t.positive;
  }
  return t;
}

void accumulate_sign_bits(std::span<const std::int8_t> row, std::uint32_t bit, std::span<std::uint32_t> negative,
                          std::span<std::uint32_t> zero) {
  assert(negative.size() >= row.size() && zero.size() >= row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) negative[i] |= bit;
    else if (row[i] == 0) zero[i] |= bit;
  }
}

void first_negative_bit(std::uint32_t neg1, std::span<const std::uint32_t> neg2,
                        std::span<const std::uint32_t> zero2, std::span<std::uint8_t> out) {
  assert(zero2.size() == neg2.size() && out.size() >= neg2.size());
  for (std::size_t i = 0; i < neg2.size(); ++i) {
    const std::uint32_t mask = (zero2[i] & neg1) | (~zero2[i] & neg2[i]);
    out[i] = mask == 0 ? kUnresolved : static_cast<std::uint8_t>(std::countr_zero(mask));
  }
}

}  // namespace eta_lab::kernels::scalar
