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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eta_lab/commands.hpp"
#include "eta_lab/error.hpp"
#include "eta_lab/verify.hpp"

namespace {

using namespace eta_lab;

struct Shared {
  RunConfig config;
  std::string format = "text";
  std::string output;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, Shared& s, bool with_x) {
  if (with_x) cmd->add_option("--x", s.config.x, "Bound on |D| or |D1 D2|")->capture_default_str();
  cmd->add_option("--K", s.config.truncation, "Series truncation")->capture_default_str();
  cmd->add_option("--cap", s.config.cap, "Largest prime scanned for eta and n(D)")->capture_default_str();
  cmd->add_option("--workers", s.config.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--format", s.format, "text, csv or json")->capture_default_str();
  cmd->add_option("--output,-o", s.output, "Write to a file instead of standard output");
  cmd->add_option("--digits", s.config.digits, "Decimal digits in rendered values")->capture_default_str();
  cmd->add_flag("--no-timestamp", s.no_timestamp, "Omit the generation time");
}

int write(const Shared& s, const CommandOutput& out) {
  if (s.output.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(s.output, std::ios::binary);
    if (!f) {
      std::cerr << "eta_lab: cannot open " << s.output << " for writing\n";
      return kExitUsage;
    }
    f << out.text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on signs of Eisenstein series coefficients"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Shared s;
  std::int64_t d1 = 0, d2 = 0;
  unsigned k_sigma = 2;
  int k_qexp = 2;
  std::uint64_t n = 1;
  std::size_t terms = 10;

  auto* constants = app.add_subcommand("constants", "Rigorous enclosures of the series constants");
  add_common(constants, s, false);

  auto* eta_cmd = app.add_subcommand("eta", "Least prime with a negative coefficient, with the sign trace");
  eta_cmd->add_option("D1", d1)->required();
  eta_cmd->add_option("D2", d2)->required();
  add_common(eta_cmd, s, false);

  auto* sigma = app.add_subcommand("sigma", "Twisted divisor sum sigma_{k-1}(n)");
  sigma->add_option("D1", d1)->required();
  sigma->add_option("D2", d2)->required();
  sigma->add_option("k", k_sigma)->required();
  sigma->add_option("n", n)->required();
  add_common(sigma, s, false);

  auto* qexp = app.add_subcommand("qexp", "Leading q-expansion of the Eisenstein series");
  qexp->add_option("D1", d1)->required();
  qexp->add_option("D2", d2)->required();
  qexp->add_option("k", k_qexp)->required();
  qexp->add_option("--terms", terms, "Number of coefficients a_1..a_M")->capture_default_str();
  add_common(qexp, s, false);

  auto* scan = app.add_subcommand("scan", "Average of eta over pairs with |D1 D2| <= x");
  add_common(scan, s, true);

  DensityRequest density;
  std::vector<std::string> patterns;
  auto* densities = app.add_subcommand("densities", "Observed against predicted proportions");
  densities->add_option("--lemma", density.lemma_primes, "Primes p for chi_D(p) proportions")->delimiter(',');
  densities->add_option("--pollack", density.pollack_k_max, "Largest k for P(n(D) = p_k)");
  densities->add_option("--pattern", patterns, "Pair sign pattern such as 2:+1,3:-1 (repeatable)");
  add_common(densities, s, true);

  std::vector<std::string> probes;
  auto* audit = app.add_subcommand("audit", "Exact audit of the eta decomposition");
  audit->add_option("--probe", probes, "Report a specific pair D1,D2 (repeatable)");
  add_common(audit, s, true);

  auto* averages = app.add_subcommand("averages", "Pair count, harmonic sum, mean n(D), mean n_1(p)");
  add_common(averages, s, true);

  VerifyOptions verify_options;
  std::string golden;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_flag("--quick", verify_options.quick, "Skip runs at x >= 10^6");
  verify->add_option("--golden", golden, "Directory holding golden files");
  verify->add_option("--workers", verify_options.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto format = parse_format(s.format);
    if (!format) throw InvalidArgument("--format must be text, csv or json");
    s.config.format = *format;
    s.config.timestamp = !s.no_timestamp;

    if (verify->parsed()) {
      if (!golden.empty()) verify_options.golden_dir = golden;
      bool ok = true;
      run_acceptance(verify_options, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.status != Status::fail;
      });
      std::cout << (ok ? "verify: all criteria passed" : "verify: FAILED") << "\n";
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (constants->parsed()) return write(s, cmd_constants(s.config));
    if (eta_cmd->parsed()) return write(s, cmd_eta(s.config, d1, d2));
    if (sigma->parsed()) return write(s, cmd_sigma(s.config, d1, d2, k_sigma, n));
    if (qexp->parsed()) return write(s, cmd_qexp(s.config, d1, d2, k_qexp, terms));
    if (scan->parsed()) return write(s, cmd_scan(s.config));
    if (densities->parsed()) {
      for (const auto& p : patterns) density.patterns.push_back(parse_sign_pattern(p));
      return write(s, cmd_densities(s.config, density));
    }
    if (audit->parsed()) {
      std::vector<std::pair<std::int64_t, std::int64_t>> parsed;
      for (const auto& p : probes) parsed.push_back(parse_pair(p));
      return write(s, cmd_audit(s.config, parsed));
    }
    if (averages->parsed()) return write(s, cmd_averages(s.config));
  } catch (const InvalidArgument& e) {
    std::cerr << "eta_lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "eta_lab: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "eta_lab: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
