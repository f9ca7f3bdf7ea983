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

// Data-parallel inner loops of the discriminant scans. Each kernel has a
// scalar reference and, on x86-64, an AVX2 variant; `active()` picks one at
// first use from CPUID. Setting ETA_LAB_ISA=scalar forces the reference.
// All variants are bit-identical on every input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eta_lab::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Number of primes tracked in a 32-bit sign signature (p_1 .. p_32 = 131).
inline constexpr int kWindow = 32;
inline constexpr std::uint8_t kUnresolved = 0xFF;

/// D -> chi_D(p) as a lookup on D mod m, with m = 8 for p = 2 and m = p otherwise.
class ResidueCharacter {
 public:
  explicit ResidueCharacter(std::uint32_t p);

  std::uint32_t prime() const noexcept { return prime_; }
  std::uint32_t modulus() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
  std::span<const std::int32_t> table() const noexcept { return table_; }

 private:
  std::uint32_t prime_;
  std::vector<std::int32_t> table_;
};

struct SignTally {
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
  std::uint64_t positive = 0;
  friend bool operator==(const SignTally&, const SignTally&) = default;
};

struct KernelTable {
  Isa isa;

  /// out[i] = chi_{ds[i]}(p).
  void (*character_row)(const ResidueCharacter& chi, std::span<const std::int32_t> ds,
                        std::span<std::int8_t> out);

  /// Counts of -1, 0 and +1 in a sign row.
  SignTally (*tally_signs)(std::span<const std::int8_t> row);

  /// negative[i] |= bit where row[i] == -1; zero[i] |= bit where row[i] == 0.
  void (*accumulate_sign_bits)(std::span<const std::int8_t> row, std::uint32_t bit,
                               std::span<std::uint32_t> negative, std::span<std::uint32_t> zero);

  /// For a fixed first character with negative mask `neg1`, writes for each
  /// second character i the window index of the least prime whose coefficient
  /// sign is -1, i.e. the lowest set bit of
  ///   (zero2[i] & neg1) | (~zero2[i] & neg2[i]),
  /// or kUnresolved when that mask is empty.
  void (*first_negative_bit)(std::uint32_t neg1, std::span<const std::uint32_t> neg2,
                             std::span<const std::uint32_t> zero2, std::span<std::uint8_t> out);
};

/// Kernels for the host CPU (or the override).
const KernelTable& active();

/// The table for a specific ISA, or nullptr when it is not compiled in or
/// the CPU lacks it.
const KernelTable* table_for(Isa isa);

namespace scalar {
void character_row(const ResidueCharacter& chi, std::span<const std::int32_t> ds, std::span<std::int8_t> out);
SignTally tally_signs(std::span<const std::int8_t> row);
void accumulate_sign_bits(std::span<const std::int8_t> row, std::uint32_t bit, std::span<std::uint32_t> negative,
                          std::span<std::uint32_t> zero);
void first_negative_bit(std::uint32_t neg1, std::span<const std::uint32_t> neg2,
                        std::span<const std::uint32_t> zero2, std::span<std::uint8_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ETA_LAB_HAVE_AVX2_KERNELS 1
namespace avx2 {
void character_row(const ResidueCharacter& chi, std::span<const std::int32_t> ds, std::span<std::int8_t> out);
SignTally tally_signs(std::span<const std::int8_t> row);
void accumulate_sign_bits(std::span<const std::int8_t> row, std::uint32_t bit, std::span<std::uint32_t> negative,
                          std::span<std::uint32_t> zero);
void first_negative_bit(std::uint32_t neg1, std::span<const std::uint32_t> neg2,
                        std::span<const std::uint32_t> zero2, std::span<std::uint8_t> out);
}  // namespace avx2
#endif

}  // namespace eta_lab::kernels
