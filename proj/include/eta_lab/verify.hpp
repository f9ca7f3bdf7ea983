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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eta_lab {

struct VerifyOptions {
  bool quick = false;  // skip everything at x >= 10^6
  std::optional<std::filesystem::path> golden_dir;
  unsigned workers = 1;
  std::vector<int> only;  // criterion ids to run; empty runs all
};

enum class Status { pass, fail, skip };

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::fail;
  std::string measured;
  double seconds = 0;
};

/// Golden directory from the options, else $ETA_LAB_GOLDEN_DIR, else none.
std::optional<std::filesystem::path> resolve_golden_dir(const VerifyOptions& options);

/// Runs criteria 1..11 in order, reporting each as it completes.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS]  3 structure properties (0.41 s): ..."
std::string format_result(const CriterionResult& r);

/// Golden file names and the commands that produce them.
inline constexpr const char* kScanGolden = "scan_x1000000.csv";
inline constexpr const char* kAuditGolden = "audit_x10000.json";

}  // namespace eta_lab
