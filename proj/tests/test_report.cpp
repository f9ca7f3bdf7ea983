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

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "eta_lab/commands.hpp"
#include "eta_lab/error.hpp"

using namespace eta_lab;

namespace {

RunConfig config(std::uint64_t x, Format format, unsigned workers = 1) {
  RunConfig c;
  c.x = x;
  c.format = format;
  c.workers = workers;
  c.timestamp = false;
  return c;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool ascii_lf_only(const std::string& text) {
  for (const char c : text) {
    if (static_cast<unsigned char>(c) > 127 || c == '\r') return false;
  }
  return !text.empty() && text.back() == '\n';
}

constexpr const char* kScanHeader =
    "x,pairs_total,pairs_excluded,sum_eta,avg_eta,ref_theta,ref_combined,ref_Theta,delta_theta,delta_combined,delta_Theta";

}  // namespace

TEST_CASE("scan CSV schema") {
  const std::string csv = cmd_scan(config(10000, Format::csv)).text;
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == kScanHeader);
  CHECK(rows[1].rfind("10000,", 0) == 0);
  CHECK(ascii_lf_only(csv));
}

TEST_CASE("densities CSV has one row per prime and sign") {
  DensityRequest request;
  request.lemma_primes = {2, 3, 5, 7};
  const auto rows = lines(cmd_densities(config(100000, Format::csv), request).text);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0].rfind("experiment,x,label,count,population,observed,predicted,relative_error", 0) == 0);
  CHECK(rows[1].find("chi(2)=+1") != std::string::npos);
  CHECK(rows[12].find("chi(7)=0") != std::string::npos);
  CHECK_THROWS_AS(cmd_densities(config(1000, Format::csv), DensityRequest{}), InvalidArgument);
}

TEST_CASE("audit report sections") {
  const std::string text = cmd_audit(config(10000, Format::text), {{5, 33}}).text;
  for (const char* needle : {"[audit]", "[mismatch_examples]", "[probes]", "lhs_sum_eta", "sum_n_D2",
                             "sum_n_D1_eta_divides_D2", "sum_n_D2_eta_divides_D2", "difference", "mismatch_count"}) {
    CHECK_MESSAGE(text.find(needle) != std::string::npos, needle);
  }
  const auto json = nlohmann::json::parse(cmd_audit(config(10000, Format::json), {}).text);
  CHECK(json["payload"]["mismatch_examples"].size() == 10);
  CHECK(json["payload"]["audit"]["non_dividing_violations"] == "0");
}

TEST_CASE("JSON carries exact rationals as strings") {
  RunConfig c = config(0, Format::json);
  c.truncation = 50;
  const auto json = nlohmann::json::parse(cmd_constants(c).text);
  CHECK(json["tool"] == "eta_lab");
  CHECK(json["command"] == "constants");
  CHECK(!json.contains("timestamp"));
  const auto& rows = json["payload"]["constants"];
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    CHECK(row["lo"].is_string());
    CHECK(row["hi"].is_string());
    CHECK(row["lo"].get<std::string>().find('/') != std::string::npos);
  }
  CHECK(rows[5]["name"] == "combined");
}

TEST_CASE("timestamp only when requested") {
  RunConfig c = config(0, Format::text);
  CHECK(cmd_constants(c).text.find("# generated:") == std::string::npos);
  c.timestamp = true;
  CHECK(cmd_constants(c).text.find("# generated:") != std::string::npos);
  c.format = Format::json;
  CHECK(nlohmann::json::parse(cmd_constants(c).text).contains("timestamp"));
}

TEST_CASE("every command is byte-identical across runs and worker counts") {
  DensityRequest request;
  request.lemma_primes = {2, 3};
  request.pollack_k_max = 3;
  request.patterns = {{{2, Sign::negative}}};
  for (const Format f : {Format::text, Format::csv, Format::json}) {
    const std::string scan = cmd_scan(config(20000, f)).text;
    const std::string dens = cmd_densities(config(20000, f), request).text;
    const std::string audit = cmd_audit(config(20000, f), {{5, 33}}).text;
    const std::string avg = cmd_averages(config(20000, f)).text;
    for (unsigned w = 1; w <= 8; ++w) {
      CHECK(cmd_scan(config(20000, f, w)).text == scan);
      CHECK(cmd_densities(config(20000, f, w), request).text == dens);
      CHECK(cmd_audit(config(20000, f, w), {{5, 33}}).text == audit);
      CHECK(cmd_averages(config(20000, f, w)).text == avg);
    }
  }
}

TEST_CASE("single evaluations") {
  const auto eta = nlohmann::json::parse(cmd_eta(config(0, Format::json), 5, -3).text);
  CHECK(eta["payload"]["eta"]["eta"] == "2");
  CHECK(eta["payload"]["trace"].size() == 1);
  const auto never = nlohmann::json::parse(cmd_eta(config(0, Format::json), -3, 1).text);
  CHECK(never["payload"]["eta"]["eta"] == "never");
  RunConfig capped = config(0, Format::json);
  capped.cap = 3;
  const CommandOutput out = cmd_eta(capped, -4, -8);
  CHECK(out.exit_code == kExitCheckFailed);
  CHECK(nlohmann::json::parse(out.text)["payload"]["eta"]["eta"] == "cap_exceeded");
  CHECK(cmd_sigma(config(0, Format::csv), 1, -4, 3, 3).text == "D1,D2,k,n,sigma\n1,-4,3,3,-8\n");
  const auto qexp = nlohmann::json::parse(cmd_qexp(config(0, Format::json), 1, -4, 3, 3).text);
  CHECK(qexp["payload"]["qexp"]["constant_term"] == "-1/4");
  CHECK(qexp["payload"]["coefficients"] == nlohmann::json::array({"1", "1", "-8"}));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(cmd_eta(config(0, Format::text), 9, -3), InvalidArgument);
  CHECK_THROWS_AS(cmd_eta(config(0, Format::text), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(cmd_qexp(config(0, Format::text), 1, -4, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(cmd_scan(config(kMaxScanBound + 1, Format::csv)), InvalidArgument);
  RunConfig c = config(1000, Format::csv);
  c.truncation = 3;
  CHECK_THROWS_AS(cmd_constants(c), InvalidArgument);
  c = config(1000, Format::csv);
  c.digits = 0;
  CHECK_THROWS_AS(cmd_scan(c), InvalidArgument);
}

TEST_CASE("pattern and pair parsing") {
  const auto p = parse_sign_pattern("2:+1,3:-1,5:0");
  REQUIRE(p.size() == 3);
  CHECK(p[0] == std::pair<std::uint32_t, Sign>{2, Sign::positive});
  CHECK(p[1] == std::pair<std::uint32_t, Sign>{3, Sign::negative});
  CHECK(p[2] == std::pair<std::uint32_t, Sign>{5, Sign::zero});
  CHECK_THROWS_AS(parse_sign_pattern("2:2"), InvalidArgument);
  CHECK_THROWS_AS(parse_sign_pattern("2"), InvalidArgument);
  CHECK_THROWS_AS(parse_sign_pattern(""), InvalidArgument);
  CHECK(parse_pair("5,33") == std::pair<std::int64_t, std::int64_t>{5, 33});
  CHECK(parse_pair("-3,-4") == std::pair<std::int64_t, std::int64_t>{-3, -4});
  CHECK_THROWS_AS(parse_pair("5"), InvalidArgument);
  CHECK_THROWS_AS(parse_pair("5,x"), InvalidArgument);
}
