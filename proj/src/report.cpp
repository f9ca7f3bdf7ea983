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
#include "eta_lab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace eta_lab {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string config_line(const nlohmann::ordered_json& config) {
  std::string line;
  for (const auto& [key, value] : config.items()) {
    if (!line.empty()) line += ' ';
    line += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return line;
}

void render_text_section(std::ostringstream& out, const Section& s) {
  out << "[" << s.name << "]\n";
  if (s.rows.size() == 1 && !s.tabular) {
    std::size_t width = 0;
    for (const auto& c : s.columns) width = std::max(width, c.size());
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
      out << s.columns[i] << std::string(width - s.columns[i].size() + 2, ' ') << s.rows[0][i] << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths(s.columns.size());
  for (std::size_t i = 0; i < s.columns.size(); ++i) {
    widths[i] = s.columns[i].size();
    for (const auto& row : s.rows) widths[i] = std::max(widths[i], row[i].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(s.columns);
  for (const auto& row : s.rows) line(row);
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
    if (!quote) {
      line += cells[i];
      continue;
    }
    line += '"';
    for (const char c : cells[i]) {
      if (c == '"') line += '"';
      line += c;
    }
    line += '"';
  }
  return line;
}

nlohmann::ordered_json rigorous_json(const RigorousValue& v, int digits) {
  return {{"name", v.name}, {"K", v.truncation}, {"lo", exact(v.lo)}, {"hi", exact(v.hi)},
          {"decimal", render_decimal(v, digits)}};
}

std::string width_exponent(const RigorousValue& v) {
  const BigRational w = v.width();
  if (w == 0) return "0";
  // floor(log10(w)) from the sizes of numerator and denominator, refined.
  const long e = static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 10));
  long k = e - 2;
  const auto pow10 = [](long n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n < 0 ? -n : n));
    return n < 0 ? BigRational(1) / BigRational(p) : BigRational(p);
  };
  while (pow10(k + 1) <= w) ++k;
  return "<1e" + std::to_string(k + 1);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string exact(const BigRational& q) { return to_fraction_string(q); }

std::string render(const Envelope& envelope, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::text: {
      out << "# " << kToolName << ' ' << kToolVersion << ' ' << envelope.command << '\n';
      if (!envelope.config.empty()) out << "# config: " << config_line(envelope.config) << '\n';
      if (envelope.timestamp) out << "# generated: " << utc_now() << '\n';
      for (const Section& s : envelope.sections) {
        out << '\n';
        render_text_section(out, s);
      }
      break;
    }
    case Format::csv: {
      bool first = true;
      for (const Section& s : envelope.sections) {
        if (!first) out << '\n';
        first = false;
        out << join_csv(s.columns) << '\n';
        for (const auto& row : s.rows) out << join_csv(row) << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j;
      j["tool"] = kToolName;
      j["version"] = kToolVersion;
      j["command"] = envelope.command;
      j["config"] = envelope.config;
      if (envelope.timestamp) j["timestamp"] = utc_now();
      nlohmann::ordered_json payload = nlohmann::ordered_json::object();
      for (const Section& s : envelope.sections) payload[s.name] = s.payload;
      j["payload"] = payload;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

Section constants_section(const std::vector<RigorousValue>& values, int digits) {
  Section s;
  s.name = "constants";
  s.tabular = true;
  s.columns = {"name", "K", "decimal", "lo", "hi", "width"};
  s.payload = nlohmann::ordered_json::array();
  for (const RigorousValue& v : values) {
    s.rows.push_back({v.name, std::to_string(v.truncation), render_decimal(v, digits), to_fixed(v.lo, digits + 4),
                      to_fixed(v.hi, digits + 4), width_exponent(v)});
    auto j = rigorous_json(v, digits);
    j["width"] = exact(v.width());
    s.payload.push_back(j);
  }
  return s;
}

Section scan_section(const PairScanReport& r, int digits) {
  Section s;
  s.name = "scan";
  s.columns = {"x", "pairs_total", "pairs_excluded", "sum_eta", "avg_eta", "ref_theta", "ref_combined",
               "ref_Theta", "delta_theta", "delta_combined", "delta_Theta"};
  const BigRational theta = r.ref_theta.midpoint();
  const BigRational combined = r.ref_combined.midpoint();
  const BigRational big_theta = r.ref_big_theta.midpoint();
  s.rows.push_back({std::to_string(r.x), std::to_string(r.pairs_total), std::to_string(r.pairs_excluded),
                    std::to_string(r.sum_eta), to_fixed(r.avg_eta, digits), to_fixed(theta, digits),
                    to_fixed(combined, digits), to_fixed(big_theta, digits), to_fixed(r.avg_eta - theta, digits),
                    to_fixed(r.avg_eta - combined, digits), to_fixed(r.avg_eta - big_theta, digits)});
  s.payload = {{"x", r.x},
               {"pairs_total", r.pairs_total},
               {"pairs_excluded", r.pairs_excluded},
               {"sum_eta", std::to_string(r.sum_eta)},
               {"avg_eta", exact(r.avg_eta)},
               {"avg_eta_decimal", to_fixed(r.avg_eta, digits)},
               {"ref_theta", rigorous_json(r.ref_theta, digits)},
               {"ref_combined", rigorous_json(r.ref_combined, digits)},
               {"ref_Theta", rigorous_json(r.ref_big_theta, digits)},
               {"delta_theta", to_fixed(r.avg_eta - theta, digits)},
               {"delta_combined", to_fixed(r.avg_eta - combined, digits)},
               {"delta_Theta", to_fixed(r.avg_eta - big_theta, digits)}};
  return s;
}

Section density_section(const std::vector<DensityReport>& reports, int digits) {
  Section s;
  s.name = "densities";
  s.tabular = true;
  s.columns = {"experiment", "x", "label", "count", "population", "observed", "predicted", "relative_error",
               "excluded", "outside_uniform_range"};
  s.payload = nlohmann::ordered_json::array();
  for (const DensityReport& r : reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const DensityRow& row : r.rows) {
      s.rows.push_back({r.experiment, std::to_string(r.x), row.label, std::to_string(row.count),
                        std::to_string(r.population), to_fixed(row.observed, digits), to_fixed(row.predicted, digits),
                        to_fixed(row.relative_error, digits), std::to_string(r.excluded),
                        r.outside_uniform_range ? "true" : "false"});
      rows.push_back({{"label", row.label},
                      {"count", row.count},
                      {"observed", exact(row.observed)},
                      {"predicted", exact(row.predicted)},
                      {"relative_error", exact(row.relative_error)}});
    }
    s.payload.push_back({{"experiment", r.experiment},
                         {"x", r.x},
                         {"population", r.population},
                         {"excluded", r.excluded},
                         {"excluded_note", r.excluded_note},
                         {"outside_uniform_range", r.outside_uniform_range},
                         {"rows", rows}});
  }
  return s;
}

std::vector<Section> audit_sections(const AuditReport& r) {
  Section summary;
  summary.name = "audit";
  summary.columns = {"x", "pairs_included", "lhs_sum_eta", "sum_n_D2", "sum_n_D1_eta_divides_D2",
                     "sum_n_D2_eta_divides_D2", "difference", "dividing_pairs", "mismatch_count",
                     "non_dividing_violations"};
  summary.rows.push_back({std::to_string(r.x), std::to_string(r.pairs_included), std::to_string(r.lhs),
                          std::to_string(r.sum_n_second), std::to_string(r.sum_n_first_dividing),
                          std::to_string(r.sum_n_second_dividing), std::to_string(r.difference),
                          std::to_string(r.dividing_pairs), std::to_string(r.mismatch_count),
                          std::to_string(r.non_dividing_violations)});
  summary.payload = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < summary.columns.size(); ++i) {
    summary.payload[summary.columns[i]] = summary.rows[0][i];
  }

  const std::vector<std::string> pair_columns = {"D1", "D2", "eta", "n_D1", "n_D2", "eta_divides_D2"};
  const auto pair_row = [](const AuditPair& p) {
    return std::vector<std::string>{std::to_string(p.d1),      std::to_string(p.d2),       std::to_string(p.eta),
                                    std::to_string(p.n_first), std::to_string(p.n_second), p.divides ? "true" : "false"};
  };
  const auto pair_json = [](const AuditPair& p) {
    return nlohmann::ordered_json{{"D1", p.d1},           {"D2", p.d2},           {"eta", p.eta},
                                  {"n_D1", p.n_first},    {"n_D2", p.n_second},   {"eta_divides_D2", p.divides}};
  };

  Section examples;
  examples.name = "mismatch_examples";
  examples.tabular = true;
  examples.columns = pair_columns;
  examples.payload = nlohmann::ordered_json::array();
  for (const AuditPair& p : r.mismatch_examples) {
    examples.rows.push_back(pair_row(p));
    examples.payload.push_back(pair_json(p));
  }

  std::vector<Section> out{summary, examples};
  if (!r.probes.empty()) {
    Section probes;
    probes.name = "probes";
  probes.tabular = true;
    probes.columns = {"D1", "D2", "in_range", "eta", "n_D1", "n_D2", "eta_divides_D2", "mismatch"};
    probes.payload = nlohmann::ordered_json::array();
    for (const AuditProbe& p : r.probes) {
      std::vector<std::string> row{std::to_string(p.d1), std::to_string(p.d2), p.in_range ? "true" : "false"};
      nlohmann::ordered_json j{{"D1", p.d1}, {"D2", p.d2}, {"in_range", p.in_range}};
      if (p.detail) {
        row.insert(row.end(), {std::to_string(p.detail->eta), std::to_string(p.detail->n_first),
                               std::to_string(p.detail->n_second), p.detail->divides ? "true" : "false"});
        j["eta"] = p.detail->eta;
        j["n_D1"] = p.detail->n_first;
        j["n_D2"] = p.detail->n_second;
        j["eta_divides_D2"] = p.detail->divides;
      } else {
        row.insert(row.end(), {"never", "", "", ""});
        j["eta"] = "never";
      }
      row.push_back(p.mismatch ? "true" : "false");
      j["mismatch"] = p.mismatch;
      probes.rows.push_back(row);
      probes.payload.push_back(j);
    }
    out.push_back(probes);
  }
  return out;
}

Section pair_count_section(const PairCountReport& r, int digits) {
  Section s;
  s.name = "pair_count";
  s.columns = {"x", "observed", "reference", "ratio"};
  s.rows.push_back({std::to_string(r.x), std::to_string(r.observed), format_double(r.reference, 3),
                    format_double(r.ratio, digits)});
  s.payload = {{"x", r.x},
               {"observed", r.observed},
               {"reference", format_double(r.reference, 3)},
               {"ratio", format_double(r.ratio, digits)},
               {"zeta2_lo", exact(zeta2_lower())},
               {"zeta2_hi", exact(zeta2_upper())}};
  return s;
}

Section harmonic_section(const HarmonicReport& r, int digits) {
  Section s;
  s.name = "harmonic";
  s.columns = {"x", "sum", "reference", "ratio"};
  s.rows.push_back({std::to_string(r.x), to_fixed(r.sum, digits), format_double(r.reference, digits),
                    format_double(r.ratio, digits)});
  s.payload = {{"x", r.x},
               {"sum", exact(r.sum)},
               {"sum_decimal", to_fixed(r.sum, digits)},
               {"reference", format_double(r.reference, digits)},
               {"ratio", format_double(r.ratio, digits)}};
  return s;
}

Section average_section(const std::vector<AverageReport>& reports, int digits) {
  Section s;
  s.name = "averages";
  s.tabular = true;
  s.columns = {"statistic", "x", "population", "excluded", "total", "average", "reference", "delta"};
  s.payload = nlohmann::ordered_json::array();
  for (const AverageReport& r : reports) {
    const BigRational ref = r.reference.midpoint();
    s.rows.push_back({r.statistic, std::to_string(r.x), std::to_string(r.population), std::to_string(r.excluded),
                      std::to_string(r.total), to_fixed(r.average, digits), to_fixed(ref, digits),
                      to_fixed(r.average - ref, digits)});
    s.payload.push_back({{"statistic", r.statistic},
                         {"x", r.x},
                         {"population", r.population},
                         {"excluded", r.excluded},
                         {"total", std::to_string(r.total)},
                         {"average", exact(r.average)},
                         {"reference", rigorous_json(r.reference, digits)}});
  }
  return s;
}

}  // namespace eta_lab
