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
#include <doctest.h>

#include <random>
#include <vector>

#include "eta_lab/discriminant.hpp"
#include "eta_lab/kernels.hpp"
#include "eta_lab/kronecker.hpp"
#include "eta_lab/signature.hpp"

using namespace eta_lab;
using namespace eta_lab::kernels;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out{table_for(Isa::scalar)};
  if (const KernelTable* t = table_for(Isa::avx2)) out.push_back(t);
  return out;
}

std::vector<std::int32_t> random_discriminants(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int32_t> value(-(1 << 30), 1 << 30);
  std::vector<std::int32_t> ds(n);
  for (auto& d : ds) d = value(rng);
  return ds;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  REQUIRE(table_for(Isa::scalar) != nullptr);
  CHECK(table_for(Isa::scalar)->isa == Isa::scalar);
  MESSAGE("active kernels: " << isa_name(active().isa));
}

TEST_CASE("ResidueCharacter matches kronecker") {
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 131u}) {
    const ResidueCharacter chi(p);
    CHECK(chi.modulus() == (p == 2 ? 8u : p));
    for (std::int64_t d = -300; d <= 300; ++d) {
      const auto r = static_cast<std::uint32_t>(((d % chi.modulus()) + chi.modulus()) % chi.modulus());
      CHECK(chi.table()[r] == to_int(kronecker(d, p)));
    }
  }
  CHECK_THROWS(ResidueCharacter(9));
}

TEST_CASE("character_row agrees across ISAs and with kronecker") {
  std::mt19937_64 rng(7);
  for (const std::size_t n : {0u, 1u, 7u, 8u, 31u, 32u, 33u, 1000u, 4099u}) {
    const auto ds = random_discriminants(rng, n);
    for (const std::uint32_t p : {2u, 3u, 5u, 13u, 127u, 131u}) {
      const ResidueCharacter chi(p);
      std::vector<std::int8_t> expected(n);
      for (std::size_t i = 0; i < n; ++i) expected[i] = static_cast<std::int8_t>(to_int(kronecker(ds[i], p)));
      for (const KernelTable* k : variants()) {
        std::vector<std::int8_t> out(n, 42);
        k->character_row(chi, ds, out);
        CHECK_MESSAGE(out == expected, isa_name(k->isa) << " n=" << n << " p=" << p);
      }
    }
  }
}

TEST_CASE("character_row on extreme values") {
  const std::vector<std::int32_t> ds = {-(1 << 30), (1 << 30), -1, 1, 0, -2147483647, 2147483647, -8, 8, -131, 131,
                                        -262, 262, 7, -7, 1073741823, -1073741823};
  for (const std::uint32_t p : {2u, 3u, 7u, 131u}) {
    const ResidueCharacter chi(p);
    std::vector<std::int8_t> a(ds.size()), b(ds.size());
    scalar::character_row(chi, ds, a);
    for (std::size_t i = 0; i < ds.size(); ++i) CHECK(a[i] == to_int(kronecker(ds[i], p)));
    for (const KernelTable* k : variants()) {
      k->character_row(chi, ds, b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("tally_signs and accumulate_sign_bits agree across ISAs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> sign(-1, 1);
  std::uniform_int_distribution<std::uint32_t> word;
  for (const std::size_t n : {0u, 1u, 31u, 32u, 33u, 95u, 1000u, 70000u}) {
    std::vector<std::int8_t> row(n);
    for (auto& s : row) s = static_cast<std::int8_t>(sign(rng));
    SignTally expected;
    for (const auto s : row) (s < 0 ? expected.negative : s == 0 ? expected.zero : expected.positive)++;
    std::vector<std::uint32_t> neg0(n), zero0(n);
    for (std::size_t i = 0; i < n; ++i) {
      neg0[i] = word(rng);
      zero0[i] = word(rng);
    }
    for (const KernelTable* k : variants()) {
      CHECK(k->tally_signs(row) == expected);
      for (const std::uint32_t bit : {1u, 1u << 17, 1u << 31}) {
        auto neg = neg0, zero = zero0;
        k->accumulate_sign_bits(row, bit, neg, zero);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(neg[i] == (neg0[i] | (row[i] == -1 ? bit : 0u)));
          CHECK(zero[i] == (zero0[i] | (row[i] == 0 ? bit : 0u)));
        }
      }
    }
  }
}

TEST_CASE("first_negative_bit agrees across ISAs including unresolved and bit 31") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> word;
  std::uniform_int_distribution<int> shift(0, 31);
  for (const std::size_t n : {0u, 1u, 7u, 8u, 9u, 64u, 1001u}) {
    std::vector<std::uint32_t> neg2(n), zero2(n);
    for (std::size_t i = 0; i < n; ++i) {
      switch (i % 4) {
        case 0: neg2[i] = word(rng), zero2[i] = word(rng); break;
        case 1: neg2[i] = 0, zero2[i] = 0; break;                  // unresolved
        case 2: neg2[i] = 1u << 31, zero2[i] = 0x7FFFFFFF; break;  // only bit 31
        default: neg2[i] = 1u << shift(rng), zero2[i] = (1u << shift(rng)) | (1u << shift(rng)); break;
      }
    }
    for (const std::uint32_t neg1 : {0u, 1u, 0x80000000u, word(rng), 0xFFFFFFFFu}) {
      std::vector<std::uint8_t> expected(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t mask = (zero2[i] & neg1) | (~zero2[i] & neg2[i]);
        expected[i] = mask == 0 ? kUnresolved : static_cast<std::uint8_t>(__builtin_ctz(mask));
      }
      for (const KernelTable* k : variants()) {
        std::vector<std::uint8_t> out(n, 0);
        k->first_negative_bit(neg1, neg2, zero2, out);
        CHECK_MESSAGE(out == expected, isa_name(k->isa) << " n=" << n);
      }
    }
  }
}

TEST_CASE("SignatureTable matches direct evaluation") {
  const DiscriminantTable table = sieve_fundamental(5000);
  const SignatureTable sig(table, default_primes(), 100000);
  REQUIRE(sig.size() == table.size());
  CHECK(sig.window_prime(0) == 2);
  CHECK(sig.window_prime(kWindow - 1) == 131);
  int failures = 0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const std::int64_t d = table[j].value();
    std::uint32_t neg = 0, zero = 0, least = 0;
    for (int i = 0; i < kWindow; ++i) {
      const Sign s = kronecker(d, sig.window_prime(i));
      if (s == Sign::negative) neg |= 1u << i;
      if (s == Sign::zero) zero |= 1u << i;
    }
    if (d != 1) {
      for (std::uint64_t p = 2;; ++p) {
        if (is_prime_trial(p) && kronecker(d, p) == Sign::negative) {
          least = static_cast<std::uint32_t>(p);
          break;
        }
      }
    }
    failures += sig.negative()[j] != neg || sig.zero()[j] != zero || sig.least_negative()[j] != least;
  }
  CHECK(failures == 0);
}
