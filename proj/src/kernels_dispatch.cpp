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
#include <cstdlib>
#include <string>
#include <string_view>

#include "eta_lab/error.hpp"
#include "eta_lab/kernels.hpp"
#include "eta_lab/kronecker.hpp"

namespace eta_lab::kernels {

ResidueCharacter::ResidueCharacter(std::uint32_t p) : prime_(p) {
  if (!is_prime_trial(p)) throw InvalidArgument("ResidueCharacter: " + std::to_string(p) + " is not prime");
  const std::uint32_t m = p == 2 ? 8 : p;
  table_.resize(m);
  for (std::uint32_t r = 0; r < m; ++r) table_[r] = to_int(kronecker(r, p));
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::character_row, &scalar::tally_signs,
                              &scalar::accumulate_sign_bits, &scalar::first_negative_bit};

#ifdef ETA_LAB_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::avx2, &avx2::character_row, &avx2::tally_signs, &avx2::accumulate_sign_bits,
                            &avx2::first_negative_bit};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable& select() {
  if (const char* forced = std::getenv("ETA_LAB_ISA"); forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalar;
  }
  if (const KernelTable* t = table_for(Isa::avx2)) return *t;
  return kScalar;
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar: return &kScalar;
    case Isa::avx2:
#ifdef ETA_LAB_HAVE_AVX2_KERNELS
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace eta_lab::kernels
