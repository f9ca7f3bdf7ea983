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
// Compiled with -mavx2; only reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <cassert>

#include "eta_lab/kernels.hpp"

namespace eta_lab::kernels::avx2 {

namespace {

// Eight 32-bit lanes in [-128, 255] narrowed to eight bytes in lane order.
inline __m128i narrow_epi32_to_epi8(__m256i v, bool is_unsigned) {
  const __m256i w = _mm256_packs_epi32(v, v);
  const __m256i b = is_unsigned ? _mm256_packus_epi16(w, w) : _mm256_packs_epi16(w, w);
  const __m256i gathered = _mm256_permutevar8x32_epi32(b, _mm256_setr_epi32(0, 4, 0, 4, 0, 4, 0, 4));
  return _mm256_castsi256_si128(gathered);
}

// floor-mod of eight int32 lanes by a small positive modulus, through doubles.
// |d| < 2^31 so d * (1/m) is within 1 of the true quotient; one correction
// step on each side restores the exact residue.
inline __m256i mod_epi32(__m256i d, __m256d m, __m256d inv_m) {
  const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(d));
  const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(d, 1));
  const auto reduce = [&](__m256d x) {
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv_m));
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, m));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), m));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, m, _CMP_GE_OQ), m));
    return _mm256_cvttpd_epi32(r);
  };
  return _mm256_set_m128i(reduce(hi), reduce(lo));
}

}  // namespace

void character_row(const ResidueCharacter& chi, std::span<const std::int32_t> ds, std::span<std::int8_t> out) {
  assert(out.size() >= ds.size());
  const auto table = chi.table();
  const std::size_t n = ds.size();
  std::size_t i = 0;
  if (chi.modulus() == 8) {
    const __m256i lut = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.data()));
    const __m256i seven = _mm256_set1_epi32(7);
    for (; i + 8 <= n; i += 8) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ds.data() + i));
      const __m256i v = _mm256_permutevar8x32_epi32(lut, _mm256_and_si256(d, seven));
      _mm_storel_epi64(reinterpret_cast<__m128i*>(out.data() + i), narrow_epi32_to_epi8(v, false));
    }
  } else {
    const __m256d m = _mm256_set1_pd(static_cast<double>(chi.modulus()));
    const __m256d inv_m = _mm256_set1_pd(1.0 / static_cast<double>(chi.modulus()));
    for (; i + 8 <= n; i += 8) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ds.data() + i));
      const __m256i r = mod_epi32(d, m, inv_m);
      const __m256i v = _mm256_i32gather_epi32(table.data(), r, 4);
      _mm_storel_epi64(reinterpret_cast<__m128i*>(out.data() + i), narrow_epi32_to_epi8(v, false));
    }
  }
  scalar::character_row(chi, ds.subspan(i), out.subspan(i));
}

SignTally tally_signs(std::span<const std::int8_t> row) {
  SignTally t;
  const std::size_t n = row.size();
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    const auto neg = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(zero, v)));
    const auto nil = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    t.negative += static_cast<std::uint64_t>(__builtin_popcount(neg));
    t.zero += static_cast<std::uint64_t>(__builtin_popcount(nil));
  }
  t.positive = i - t.negative - t.zero;
  const SignTally rest = scalar::tally_signs(row.subspan(i));
  t.negative += rest.negative;
  t.zero += rest.zero;
  t.positive += rest.positive;
  return t;
}

void accumulate_sign_bits(std::span<const std::int8_t> row, std::uint32_t bit, std::span<std::uint32_t> negative,
                          std::span<std::uint32_t> zero) {
  assert(negative.size() >= row.size() && zero.size() >= row.size());
  const std::size_t n = row.size();
  std::size_t i = 0;
  const __m256i b = _mm256_set1_epi32(static_cast<int>(bit));
  const __m256i z = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_cvtepi8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row.data() + i)));
    auto* np = reinterpret_cast<__m256i*>(negative.data() + i);
    auto* zp = reinterpret_cast<__m256i*>(zero.data() + i);
    const __m256i is_neg = _mm256_cmpgt_epi32(z, s);
    const __m256i is_zero = _mm256_cmpeq_epi32(s, z);
    _mm256_storeu_si256(np, _mm256_or_si256(_mm256_loadu_si256(np), _mm256_and_si256(is_neg, b)));
    _mm256_storeu_si256(zp, _mm256_or_si256(_mm256_loadu_si256(zp), _mm256_and_si256(is_zero, b)));
  }
  scalar::accumulate_sign_bits(row.subspan(i), bit, negative.subspan(i), zero.subspan(i));
}

void first_negative_bit(std::uint32_t neg1, std::span<const std::uint32_t> neg2,
                        std::span<const std::uint32_t> zero2, std::span<std::uint8_t> out) {
  assert(zero2.size() == neg2.size() && out.size() >= neg2.size());
  const std::size_t n = neg2.size();
  std::size_t i = 0;
  const __m256i n1 = _mm256_set1_epi32(static_cast<int>(neg1));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i exp_mask = _mm256_set1_epi32(0xFF);
  const __m256i bias = _mm256_set1_epi32(127);
  const __m256i unresolved = _mm256_set1_epi32(kUnresolved);
  for (; i + 8 <= n; i += 8) {
    const __m256i z2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(zero2.data() + i));
    const __m256i g2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(neg2.data() + i));
    const __m256i mask = _mm256_or_si256(_mm256_and_si256(z2, n1), _mm256_andnot_si256(z2, g2));
    // Isolate the lowest set bit; as a float its exponent is the bit index.
    // Bit 31 converts to -2^31, whose exponent field is the same.
    const __m256i low = _mm256_and_si256(mask, _mm256_sub_epi32(zero, mask));
    const __m256i bits = _mm256_castps_si256(_mm256_cvtepi32_ps(low));
    const __m256i index = _mm256_sub_epi32(_mm256_and_si256(_mm256_srli_epi32(bits, 23), exp_mask), bias);
    const __m256i empty = _mm256_cmpeq_epi32(mask, zero);
    const __m256i v = _mm256_blendv_epi8(index, unresolved, empty);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(out.data() + i), narrow_epi32_to_epi8(v, true));
  }
  scalar::first_negative_bit(neg1, neg2.subspan(i), zero2.subspan(i), out.subspan(i));
}

}  // namespace eta_lab::kernels::avx2
