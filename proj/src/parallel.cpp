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
#include "eta_lab/parallel.hpp"

#include <cstdint>

namespace eta_lab {

std::vector<std::size_t> pair_prefixes(const DiscriminantTable& table, std::uint64_t x) {
  const std::size_t limit = table.count_up_to(x);
  std::vector<std::size_t> prefix(limit);
  const auto values = table.values();
  for (std::size_t i = 0; i < limit; ++i) {
    const std::int64_t v = values[i];
    prefix[i] = table.count_up_to(x / static_cast<std::uint64_t>(v < 0 ? -v : v));
  }
  return prefix;
}

std::vector<PairBlock> plan_pair_blocks(const std::vector<std::size_t>& prefix, std::size_t grain) {
  std::vector<PairBlock> blocks;
  std::size_t i = 0;
  while (i < prefix.size()) {
    if (prefix[i] > grain) {
      for (std::size_t lo = 0; lo < prefix[i]; lo += grain) {
        blocks.push_back({i, i + 1, lo, std::min(prefix[i], lo + grain)});
      }
      ++i;
      continue;
    }
    PairBlock b{i, i, 0, SIZE_MAX};
    std::size_t load = 0;
    while (b.first_end < prefix.size() && prefix[b.first_end] <= grain && load < grain) {
      load += prefix[b.first_end];
      ++b.first_end;
    }
    blocks.push_back(b);
    i = b.first_end;
  }
  return blocks;
}

}  // namespace eta_lab
