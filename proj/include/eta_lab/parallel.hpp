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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "eta_lab/discriminant.hpp"

namespace eta_lab {

/// A slice of the ordered pair space {(D1, D2) : |D1 D2| <= x}, in table
/// indices. Every D1 in [first_begin, first_end) is paired with the second
/// indices [second_begin, min(second_end, prefix(D1))).
struct PairBlock {
  std::size_t first_begin = 0;
  std::size_t first_end = 0;
  std::size_t second_begin = 0;
  std::size_t second_end = 0;
};

/// Number of second entries paired with each first entry: count_up_to(x / |D1|).
std::vector<std::size_t> pair_prefixes(const DiscriminantTable& table, std::uint64_t x);

/// Splits the pair space into blocks of roughly `grain` pairs, in canonical
/// (D1, D2) order. Heavy D1 rows are cut along D2. The split depends only on
/// the prefixes, never on the worker count.
std::vector<PairBlock> plan_pair_blocks(const std::vector<std::size_t>& prefix, std::size_t grain = 1 << 15);

/// Calls row(i, lo, hi) for each first index of a block with its second range.
template <typename Row>
void for_each_row(const PairBlock& block, const std::vector<std::size_t>& prefix, Row&& row) {
  for (std::size_t i = block.first_begin; i < block.first_end; ++i) {
    const std::size_t hi = std::min(prefix[i], block.second_end);
    if (block.second_begin < hi) row(i, block.second_begin, hi);
  }
}

/// Runs fn(i) for i in [0, count) on `workers` threads and returns the
/// results in index order. The first exception by index is rethrown.
template <typename Result, typename Fn>
std::vector<Result> run_ordered(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace eta_lab
