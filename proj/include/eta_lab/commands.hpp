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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eta_lab/constants.hpp"
#include "eta_lab/newform.hpp"
#include "eta_lab/report.hpp"
#include "eta_lab/sign.hpp"

namespace eta_lab {

/// Exit codes: 0 success, 1 usage or input error, 2 failed check or cap exhaustion.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Largest scan bound accepted; beyond it the tables no longer fit a desk machine.
inline constexpr std::uint64_t kMaxScanBound = 100000000;

struct RunConfig {
  std::uint64_t x = 100000;
  std::size_t truncation = kDefaultTruncation;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
  Format format = Format::text;
  int digits = 12;
  bool timestamp = true;
};

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

struct DensityRequest {
  std::vector<std::uint32_t> lemma_primes;
  std::size_t pollack_k_max = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Sign>>> patterns;
};

/// "2:+1,3:-1,5:0" -> [(2, +1), (3, -1), (5, 0)].
std::vector<std::pair<std::uint32_t, Sign>> parse_sign_pattern(std::string_view text);

/// "5,33" -> (5, 33).
std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view text);

CommandOutput cmd_constants(const RunConfig& config);
CommandOutput cmd_eta(const RunConfig& config, std::int64_t d1, std::int64_t d2);
CommandOutput cmd_sigma(const RunConfig& config, std::int64_t d1, std::int64_t d2, unsigned k, std::uint64_t n);
CommandOutput cmd_qexp(const RunConfig& config, std::int64_t d1, std::int64_t d2, int k, std::size_t terms);
CommandOutput cmd_scan(const RunConfig& config);
CommandOutput cmd_densities(const RunConfig& config, const DensityRequest& request);
CommandOutput cmd_audit(const RunConfig& config, const std::vector<std::pair<std::int64_t, std::int64_t>>& probes);
CommandOutput cmd_averages(const RunConfig& config);

}  // namespace eta_lab
