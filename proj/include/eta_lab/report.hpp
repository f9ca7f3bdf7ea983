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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eta_lab/constants.hpp"
#include "eta_lab/experiments.hpp"
#include "eta_lab/newform.hpp"

namespace eta_lab {

enum class Format { text, csv, json };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::string_view kToolName = "eta_lab";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// One named table. CSV and text render the table; JSON renders `payload`,
/// which carries exact quantities as "p/q" strings.
struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json payload;
  bool tabular = false;  // text: keep the table layout even for a single row
};

struct Envelope {
  std::string command;
  nlohmann::ordered_json config;
  bool timestamp = true;
  std::vector<Section> sections;
};

/// text: "#" header lines (tool, config, time) then each section.
/// csv:  each section as header + rows, sections separated by a blank line.
///       No envelope, so the first line is always the column header.
/// json: {"tool", "version", "command", "config", ["timestamp"], "payload": {section: ...}}.
std::string render(const Envelope& envelope, Format format);

std::string exact(const BigRational& q);

Section constants_section(const std::vector<RigorousValue>& values, int digits);
Section scan_section(const PairScanReport& r, int digits);
Section density_section(const std::vector<DensityReport>& reports, int digits);
std::vector<Section> audit_sections(const AuditReport& r);
Section pair_count_section(const PairCountReport& r, int digits);
Section harmonic_section(const HarmonicReport& r, int digits);
Section average_section(const std::vector<AverageReport>& reports, int digits);

}  // namespace eta_lab
