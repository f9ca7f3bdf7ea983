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
#include <string_view>

namespace eta_lab {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

template <typename Int>
constexpr Sign sign_of(Int v) noexcept {
  return v < 0 ? Sign::negative : (v > 0 ? Sign::positive : Sign::zero);
}

constexpr std::string_view to_string(Sign s) noexcept {
  switch (s) {
    case Sign::negative: return "-1";
    case Sign::zero: return "0";
    case Sign::positive: return "+1";
  }
  return "?";
}

}  // namespace eta_lab
