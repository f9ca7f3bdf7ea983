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
#include "eta_lab/commands.hpp"

#include <charconv>
#include <string>

#include "eta_lab/error.hpp"
#include "eta_lab/experiments.hpp"
#include "eta_lab/kronecker.hpp"

namespace eta_lab {

namespace {

void check_common(const RunConfig& c) {
  if (c.digits < 1 || c.digits > 200) throw InvalidArgument("--digits must be in 1..200");
  if (c.workers == 0) throw InvalidArgument("--workers must be >= 1");
  if (c.cap < 2) throw InvalidArgument("--cap must be >= 2");
}

void check_bound(const RunConfig& c) {
  if (c.x > kMaxScanBound) {
    throw InvalidArgument("--x " + std::to_string(c.x) +
                          " exceeds 10^8; the discriminant and signature tables would not fit in memory. "
                          "Run at 10^8 or below.");
  }
}

void check_truncation(const RunConfig& c) {
  if (c.truncation < minimum_truncation()) {
    throw InvalidArgument("--K must be >= " + std::to_string(minimum_truncation()) +
                          " so that p_K >= 25 and the tail bound applies");
  }
}

// Worker count is left out of the echo: it never changes a result.
nlohmann::ordered_json scan_config(const RunConfig& c) {
  return {{"x", c.x}, {"K", c.truncation}, {"cap", c.cap}, {"digits", c.digits}};
}

CommandOutput emit(const RunConfig& c, std::string command, nlohmann::ordered_json config,
                   std::vector<Section> sections, int exit_code = kExitOk) {
  Envelope e{std::move(command), std::move(config), c.timestamp, std::move(sections)};
  return {render(e, c.format), exit_code};
}

template <typename Int>
Int parse_int(std::string_view text, const char* what) {
  Int v{};
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return v;
}

ExperimentOptions options_of(const RunConfig& c) { return {c.cap, c.workers, c.truncation}; }

}  // namespace

std::vector<std::pair<std::uint32_t, Sign>> parse_sign_pattern(std::string_view text) {
  std::vector<std::pair<std::uint32_t, Sign>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("pattern item '" + std::string(item) + "' is not p:sign");
    const auto p = parse_int<std::uint32_t>(item.substr(0, colon), "pattern prime");
    const auto s = parse_int<int>(item.substr(colon + 1), "pattern sign");
    if (s < -1 || s > 1) throw InvalidArgument("pattern sign must be -1, 0 or +1");
    out.emplace_back(p, static_cast<Sign>(s));
  }
  if (out.empty()) throw InvalidArgument("empty sign pattern");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InvalidArgument("pair '" + std::string(text) + "' is not D1,D2");
  return {parse_int<std::int64_t>(text.substr(0, comma), "D1"), parse_int<std::int64_t>(text.substr(comma + 1), "D2")};
}

CommandOutput cmd_constants(const RunConfig& c) {
  check_common(c);
  check_truncation(c);
  const PrimeTable primes = PrimeTable::with_count(c.truncation + 1);
  std::vector<RigorousValue> values;
  for (const Series s : kAllSeries) values.push_back(rigorous_constant(s, c.truncation, primes));
  values.push_back(combined_constant(c.truncation, primes));
  values.push_back(mu_constant(c.truncation, primes));
  return emit(c, "constants", {{"K", c.truncation}, {"digits", c.digits}}, {constants_section(values, c.digits)});
}

CommandOutput cmd_eta(const RunConfig& c, std::int64_t d1, std::int64_t d2) {
  check_common(c);
  const NewformPair pair(d1, d2);
  const PrimeTable local = c.cap <= default_primes().limit() ? PrimeTable(2) : PrimeTable(c.cap);
  const PrimeTable& primes = c.cap <= default_primes().limit() ? default_primes() : local;
  const EtaResult result = eta(pair, primes, c.cap);

  Section summary;
  summary.name = "eta";
  summary.columns = {"D1", "D2", "level", "eta"};
  std::string value;
  int exit_code = kExitOk;
  if (const auto p = found_prime(result)) {
    value = std::to_string(*p);
  } else if (std::holds_alternative<Never>(result)) {
    value = "never";
  } else {
    value = "cap_exceeded";
    exit_code = kExitCheckFailed;
  }
  const auto level = static_cast<std::uint64_t>(d1 < 0 ? -d1 : d1) * static_cast<std::uint64_t>(d2 < 0 ? -d2 : d2);
  summary.rows.push_back({std::to_string(d1), std::to_string(d2), std::to_string(level), value});
  summary.payload = {{"D1", d1}, {"D2", d2}, {"level", level}, {"eta", value}};

  // Sign at each prime scanned, up to eta (or a short prefix when eta is Never).
  Section trace;
  trace.name = "trace";
  trace.tabular = true;
  trace.columns = {"p", "p_divides_D2", "chi_D1", "chi_D2", "sign"};
  trace.payload = nlohmann::ordered_json::array();
  const std::uint64_t stop = found_prime(result).value_or(std::min<std::uint64_t>(c.cap, 31));
  for (const std::uint32_t p : primes.values()) {
    if (p > stop) break;
    const bool divides = d2 % static_cast<std::int64_t>(p) == 0;
    const Sign s = sigma_sign_at_prime(pair, p);
    const std::string c1(to_string(kronecker(d1, p)));
    const std::string c2(to_string(kronecker(d2, p)));
    trace.rows.push_back({std::to_string(p), divides ? "true" : "false", c1, c2, std::string(to_string(s))});
    trace.payload.push_back({{"p", p}, {"p_divides_D2", divides}, {"chi_D1", c1}, {"chi_D2", c2},
                             {"sign", std::string(to_string(s))}});
  }
  return emit(c, "eta", {{"cap", c.cap}}, {summary, trace}, exit_code);
}

CommandOutput cmd_sigma(const RunConfig& c, std::int64_t d1, std::int64_t d2, unsigned k, std::uint64_t n) {
  check_common(c);
  const NewformPair pair(d1, d2);
  const BigInt v = sigma_coefficient(pair, k, n);
  Section s;
  s.name = "sigma";
  s.columns = {"D1", "D2", "k", "n", "sigma"};
  s.rows.push_back({std::to_string(d1), std::to_string(d2), std::to_string(k), std::to_string(n), v.get_str()});
  s.payload = {{"D1", d1}, {"D2", d2}, {"k", k}, {"n", n}, {"sigma", v.get_str()}};
  return emit(c, "sigma", nlohmann::ordered_json::object(), {s});
}

CommandOutput cmd_qexp(const RunConfig& c, std::int64_t d1, std::int64_t d2, int k, std::size_t terms) {
  check_common(c);
  const NewformPair pair(d1, d2);
  const QExpansion e = q_expansion(pair, k, terms);
  Section head;
  head.name = "qexp";
  head.columns = {"D1", "D2", "k", "level", "constant_term"};
  const auto level = static_cast<std::uint64_t>(d1 < 0 ? -d1 : d1) * static_cast<std::uint64_t>(d2 < 0 ? -d2 : d2);
  head.rows.push_back({std::to_string(d1), std::to_string(d2), std::to_string(k), std::to_string(level),
                       exact(e.constant_term)});
  head.payload = {{"D1", d1}, {"D2", d2}, {"k", k}, {"level", level}, {"constant_term", exact(e.constant_term)}};
  Section coeffs;
  coeffs.name = "coefficients";
  coeffs.tabular = true;
  coeffs.columns = {"n", "a_n"};
  coeffs.payload = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
    coeffs.rows.push_back({std::to_string(i + 1), e.coefficients[i].get_str()});
    coeffs.payload.push_back(e.coefficients[i].get_str());
  }
  return emit(c, "qexp", {{"terms", terms}}, {head, coeffs});
}

CommandOutput cmd_scan(const RunConfig& c) {
  check_common(c);
  check_bound(c);
  check_truncation(c);
  const Workspace ws(c.x, options_of(c));
  return emit(c, "scan", scan_config(c), {scan_section(scan_pairs(ws), c.digits)});
}

CommandOutput cmd_densities(const RunConfig& c, const DensityRequest& request) {
  check_common(c);
  check_bound(c);
  if (request.lemma_primes.empty() && request.pollack_k_max == 0 && request.patterns.empty()) {
    throw InvalidArgument("densities: give at least one of --lemma, --pollack, --pattern");
  }
  const Workspace ws(c.x, options_of(c));
  std::vector<DensityReport> reports;
  for (const std::uint32_t p : request.lemma_primes) reports.push_back(density_lemma(ws, p));
  if (request.pollack_k_max > 0) reports.push_back(density_pollack(ws, request.pollack_k_max));
  for (const auto& pattern : request.patterns) reports.push_back(density_sign_pattern(ws, pattern));
  nlohmann::ordered_json config = {{"x", c.x}, {"cap", c.cap}, {"digits", c.digits}};
  return emit(c, "densities", config, {density_section(reports, c.digits)});
}

CommandOutput cmd_audit(const RunConfig& c, const std::vector<std::pair<std::int64_t, std::int64_t>>& probes) {
  check_common(c);
  check_bound(c);
  const Workspace ws(c.x, options_of(c));
  const AuditReport r = decomposition_audit(ws, probes);
  return emit(c, "audit", {{"x", c.x}, {"cap", c.cap}}, audit_sections(r));
}

CommandOutput cmd_averages(const RunConfig& c) {
  check_common(c);
  check_bound(c);
  check_truncation(c);
  const Workspace ws(c.x, options_of(c));
  std::vector<Section> sections;
  sections.push_back(pair_count_section(pair_count_check(ws), c.digits));
  sections.push_back(harmonic_section(harmonic_sum_check(ws), c.digits));
  sections.push_back(average_section({average_least_negative(ws), average_least_nonresidue(c.x, c.truncation)},
                                     c.digits));
  return emit(c, "averages", scan_config(c), std::move(sections));
}

}  // namespace eta_lab
