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
#include "eta_lab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "eta_lab/commands.hpp"
#include "eta_lab/constants.hpp"
#include "eta_lab/discriminant.hpp"
#include "eta_lab/error.hpp"
#include "eta_lab/experiments.hpp"
#include "eta_lab/kronecker.hpp"
#include "eta_lab/newform.hpp"
#include "eta_lab/oracle.hpp"

namespace eta_lab {

namespace {

// Pinned thresholds.
constexpr double kConstantsSeconds = 30.0;
constexpr double kLemmaSeconds = 120.0;
constexpr double kLemmaTolerance = 0.01;
constexpr double kPollackTolerance = 0.02;
constexpr double kPatternTolerance = 0.05;
constexpr double kCountTolerance = 0.005;
constexpr double kEtaBandLow = 3.0;
constexpr double kEtaBandHigh = 6.0;
constexpr double kErdosTolerance = 0.02;
constexpr std::uint64_t kLarge = 1000000;
constexpr std::uint64_t kMedium = 100000;
constexpr std::uint64_t kSmall = 10000;
constexpr std::uint64_t kRandomSeed = 0x5eed2026;

struct Outcome {
  Status status = Status::pass;
  std::ostringstream note;

  void fail_if(bool bad, const std::string& why) {
    if (bad) {
      status = Status::fail;
      note << " FAIL(" << why << ")";
    }
  }
};

std::string fixed(double v, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

double relative(const BigRational& observed, const BigRational& predicted) {
  BigRational d = observed - predicted;
  if (d < 0) d = -d;
  return BigRational(d / predicted).get_d();
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against a golden file when a golden directory is known.
void golden_compare(Outcome& o, const std::optional<std::filesystem::path>& dir, const char* name,
                    const std::string& actual) {
  if (!dir) {
    o.note << "; golden: not configured";
    return;
  }
  const auto expected = read_file(*dir / name);
  if (!expected) {
    o.fail_if(true, std::string("golden file missing: ") + (*dir / name).string());
    return;
  }
  o.fail_if(*expected != actual, std::string("output differs from ") + name);
  if (*expected == actual) o.note << "; golden " << name << " matches";
}

RunConfig quiet(std::uint64_t x, Format format, unsigned workers) {
  RunConfig c;
  c.x = x;
  c.format = format;
  c.workers = workers;
  c.timestamp = false;
  return c;
}

Outcome constants_check() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto primes = PrimeTable::with_count(kDefaultTruncation + 1);
  const RigorousValue theta = rigorous_constant(Series::theta, kDefaultTruncation, primes);
  const RigorousValue big_theta = rigorous_constant(Series::big_theta, kDefaultTruncation, primes);
  const RigorousValue combined = combined_constant(kDefaultTruncation, primes);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string t = render_decimal(theta, 10);
  const std::string b = render_decimal(big_theta, 10);
  const std::string c = render_decimal(combined, 14);
  const double width = combined.width().get_d();
  o.note << "theta=" << t << " Theta=" << b << " combined=" << c << " width=" << width;
  o.fail_if(t.rfind("3.9750223902", 0) != 0, "theta prefix");
  o.fail_if(b.rfind("4.9809473396", 0) != 0, "Theta prefix");
  o.fail_if(c.rfind("4.63255603509332", 0) != 0, "combined prefix");
  o.fail_if(!(combined.width() < BigRational(1, 100000000000000)), "combined width");
  o.fail_if(seconds >= kConstantsSeconds, "runtime");
  return o;
}

std::vector<std::int64_t> fundamentals_up_to(std::uint64_t bound) {
  const DiscriminantTable t = sieve_fundamental(bound);
  return {t.values().begin(), t.values().end()};
}

Outcome oracle_check() {
  Outcome o;
  std::uint64_t compared = 0, mismatches = 0;
  for (std::uint64_t p = 3; p <= 500; p += 2) {
    if (!is_prime_trial(p)) continue;
    for (std::int64_t d = -500; d <= 500; ++d) {
      ++compared;
      if (kronecker(d, p) != legendre_oracle(d, p)) ++mismatches;
    }
  }
  o.note << "kronecker/legendre " << compared << " cases, " << mismatches << " failures";
  o.fail_if(mismatches != 0, "kronecker");

  const auto ds = fundamentals_up_to(1000);
  std::mt19937_64 rng(kRandomSeed);
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  const std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::uint64_t sign_cases = 0, sign_failures = 0;
  for (int i = 0; i < 10000;) {
    const std::int64_t d1 = ds[pick(rng)], d2 = ds[pick(rng)];
    if (d1 == 1 && d2 == 1) continue;
    ++i;
    const NewformPair pair(d1, d2);
    for (const std::uint64_t p : small_primes) {
      const Sign rule = sigma_sign_at_prime(pair, p);
      for (unsigned k = 2; k <= 6; ++k) {
        ++sign_cases;
        if (sign_of(sigma_coefficient(pair, k, p)) != rule) ++sign_failures;
      }
    }
  }
  o.note << "; sign rule " << sign_cases << " cases, " << sign_failures << " failures";
  o.fail_if(sign_failures != 0, "sign rule");
  return o;
}

Outcome structure_check() {
  Outcome o;
  const std::pair<std::int64_t, std::int64_t> pairs[] = {{1, -4}, {5, -3}, {-3, 8}, {-4, -8},
                                                          {5, 33}, {-7, 12}, {13, -11}, {1, 5}};
  std::uint64_t mult_cases = 0, mult_failures = 0, rec_cases = 0, rec_failures = 0;
  for (const auto& [d1, d2] : pairs) {
    const NewformPair pair(d1, d2);
    for (unsigned k = 2; k <= 4; ++k) {
      std::vector<BigInt> a(201);
      for (std::uint64_t n = 1; n <= 200; ++n) a[n] = sigma_coefficient(pair, k, n);
      for (std::uint64_t m = 2; m <= 200; ++m) {
        for (std::uint64_t n = m; n <= 200; ++n) {
          if (std::gcd(m, n) != 1) continue;
          ++mult_cases;
          if (sigma_coefficient(pair, k, m * n) != a[m] * a[n]) ++mult_failures;
        }
      }
      for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        const BigInt chi = to_int(kronecker(d1, p)) * to_int(kronecker(d2, p));
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k - 1);
        std::vector<BigInt> pw{sigma_coefficient(pair, k, 1), sigma_coefficient(pair, k, p)};
        std::uint64_t q = p;
        for (unsigned r = 1; r <= 5; ++r) {
          q *= p;
          ++rec_cases;
          const BigInt expected = pw[1] * pw[r] - chi * pk * pw[r - 1];
          const BigInt direct = sigma_coefficient(pair, k, q);
          if (expected != direct) ++rec_failures;
          pw.push_back(direct);
        }
      }
    }
  }
  o.note << "multiplicativity " << mult_cases << "/" << mult_failures << " fail, recursion " << rec_cases << "/"
         << rec_failures << " fail";
  o.fail_if(mult_failures != 0, "multiplicativity");
  o.fail_if(rec_failures != 0, "recursion");

  const auto ds = fundamentals_up_to(kSmall);
  const PrimeTable& primes = default_primes();
  std::uint64_t pairs_checked = 0, unsound = 0;
  for (const std::int64_t d1 : ds) {
    const auto m1 = static_cast<std::uint64_t>(d1 < 0 ? -d1 : d1);
    for (const std::int64_t d2 : ds) {
      const auto m2 = static_cast<std::uint64_t>(d2 < 0 ? -d2 : d2);
      if (m1 * m2 > kSmall) break;
      if (d1 == 1 && d2 == 1) continue;
      ++pairs_checked;
      const NewformPair pair(d1, d2);
      const EtaResult r = eta(pair, primes);
      const auto p = found_prime(r);
      if (!p) {
        if (!(std::holds_alternative<Never>(r) && d2 == 1)) ++unsound;
        continue;
      }
      if (d2 == 1 || sigma_sign_at_prime(pair, *p) != Sign::negative) {
        ++unsound;
        continue;
      }
      for (const std::uint32_t q : primes.values()) {
        if (q >= *p) break;
        if (sigma_sign_at_prime(pair, q) == Sign::negative) {
          ++unsound;
          break;
        }
      }
    }
  }
  o.note << "; eta soundness " << pairs_checked << " pairs, " << unsound << " failures";
  o.fail_if(unsound != 0, "eta soundness");
  return o;
}

void density_within(Outcome& o, const DensityReport& r, double tolerance) {
  double worst = 0;
  std::string label;
  for (const DensityRow& row : r.rows) {
    const double rel = relative(row.observed, row.predicted);
    if (rel >= worst) {
      worst = rel;
      label = row.label;
    }
  }
  if (o.note.tellp() > 0) o.note << "; ";
  o.note << r.experiment << " [" << label << "] rel=" << fixed(worst);
  o.fail_if(worst > tolerance, "> " + fixed(tolerance, 2));
}

Outcome lemma_check(unsigned workers) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Workspace ws(kLarge, {kDefaultCap, workers, kDefaultTruncation});
  for (const std::uint32_t p : {2u, 3u, 5u, 7u}) density_within(o, density_lemma(ws, p), kLemmaTolerance);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.fail_if(seconds >= kLemmaSeconds, "runtime");
  return o;
}

Outcome pollack_check(unsigned workers) {
  Outcome o;
  const Workspace ws(kLarge, {kDefaultCap, workers, kDefaultTruncation});
  const DensityReport r = density_pollack(ws, 4);
  density_within(o, r, kPollackTolerance);
  o.fail_if(r.rows.empty() || r.rows.front().predicted != BigRational(1, 3), "k=1 prediction is not 1/3");
  return o;
}

Outcome pattern_check(unsigned workers) {
  Outcome o;
  const Workspace ws(kMedium, {kDefaultCap, workers, kDefaultTruncation});
  const std::vector<std::vector<std::pair<std::uint32_t, Sign>>> patterns = {
      {{2, Sign::zero}}, {{2, Sign::negative}}, {{2, Sign::positive}, {3, Sign::negative}}};
  for (const auto& pattern : patterns) density_within(o, density_sign_pattern(ws, pattern), kPatternTolerance);
  return o;
}

Outcome count_check(bool quick) {
  Outcome o;
  auto small = fundamentals_up_to(10);
  std::vector<std::int64_t> expected = {1, -3, -4, 5, -7, 8, -8};
  std::sort(small.begin(), small.end());
  std::sort(expected.begin(), expected.end());
  o.note << "table(10) " << (small == expected ? "matches" : "differs");
  o.fail_if(small != expected, "table at X=10");
  if (quick) {
    o.note << "; count at 10^6 skipped (quick)";
    return o;
  }
  const DiscriminantTable t = sieve_fundamental(kLarge);
  const double zeta2 = BigRational((zeta2_lower() + zeta2_upper()) / 2).get_d();
  const double reference = static_cast<double>(kLarge) / zeta2;
  const double rel = std::abs(static_cast<double>(t.size()) - reference) / reference;
  o.note << "; count(10^6)=" << t.size() << " ref=" << fixed(reference, 1) << " rel=" << fixed(rel);
  o.fail_if(rel > kCountTolerance, "count");
  return o;
}

Outcome scan_check(const VerifyOptions& options, const std::optional<std::filesystem::path>& golden) {
  Outcome o;
  const oracle::PairTotals brute = oracle::pair_totals(kSmall);
  const PairScanReport fast = scan_pairs(Workspace(kSmall, {kDefaultCap, options.workers, kDefaultTruncation}));
  o.note << "x=10^4 sum_eta=" << fast.sum_eta << " oracle=" << brute.sum_eta;
  o.fail_if(fast.sum_eta != brute.sum_eta || fast.pairs_total != brute.pairs_total ||
                fast.pairs_excluded != brute.pairs_excluded,
            "oracle mismatch");
  if (options.quick) {
    o.note << "; x=10^6 skipped (quick)";
    return o;
  }
  const PairScanReport big = scan_pairs(Workspace(kLarge, {kDefaultCap, options.workers, kDefaultTruncation}));
  const double avg = big.avg_eta.get_d();
  o.note << "; x=10^6 avg_eta=" << fixed(avg) << " theta=" << fixed(big.ref_theta.midpoint().get_d())
         << " combined=" << fixed(big.ref_combined.midpoint().get_d())
         << " Theta=" << fixed(big.ref_big_theta.midpoint().get_d());
  o.fail_if(avg < kEtaBandLow || avg > kEtaBandHigh, "avg_eta band");
  golden_compare(o, golden, kScanGolden, cmd_scan(quiet(kLarge, Format::csv, options.workers)).text);
  return o;
}

Outcome audit_check(const VerifyOptions& options, const std::optional<std::filesystem::path>& golden) {
  Outcome o;
  const Workspace ws(kSmall, {kDefaultCap, options.workers, kDefaultTruncation});
  const AuditReport r = decomposition_audit(ws, {{5, 33}});
  o.note << "lhs=" << r.lhs << " difference=" << r.difference << " mismatches=" << r.mismatch_count
         << " non_dividing_violations=" << r.non_dividing_violations;
  o.fail_if(r.non_dividing_violations != 0, "eta != n(D2) with eta not dividing D2");
  const AuditProbe& probe = r.probes.front();
  const bool probe_ok = probe.in_range && probe.detail && probe.mismatch && probe.detail->eta == 3 &&
                        probe.detail->n_first == 2 && probe.detail->divides;
  o.note << "; (5,33) " << (probe_ok ? "mismatch eta=3 n(D1)=2" : "not as expected");
  o.fail_if(!probe_ok, "(5,33) probe");
  const std::int64_t rhs = static_cast<std::int64_t>(r.sum_n_second + r.sum_n_first_dividing) -
                           static_cast<std::int64_t>(r.sum_n_second_dividing);
  o.fail_if(static_cast<std::int64_t>(r.lhs) - rhs != r.difference, "difference arithmetic");
  const RunConfig config = quiet(kSmall, Format::json, options.workers);
  const std::string first = cmd_audit(config, {{5, 33}}).text;
  o.fail_if(first != cmd_audit(config, {{5, 33}}).text, "rerun differs");
  golden_compare(o, golden, kAuditGolden, first);
  return o;
}

Outcome erdos_check() {
  Outcome o;
  const AverageReport r = average_least_nonresidue(kLarge);
  const double mid = r.reference.midpoint().get_d();
  const double avg = r.average.get_d();
  const double rel = std::abs(avg - mid) / mid;
  o.note << "avg n_1=" << fixed(avg) << " over " << r.population << " primes, erdos=" << fixed(mid)
         << " rel=" << fixed(rel);
  o.fail_if(rel > kErdosTolerance, "erdos");
  return o;
}

Outcome determinism_check(bool quick) {
  Outcome o;
  const std::uint64_t x = quick ? kMedium : kLarge;
  const std::string base = cmd_scan(quiet(x, Format::csv, 1)).text;
  o.note << "x=" << x;
  for (const unsigned w : {4u, 8u}) {
    const bool same = cmd_scan(quiet(x, Format::csv, w)).text == base;
    o.note << " workers=" << w << (same ? " identical" : " DIFFERS");
    o.fail_if(!same, "workers " + std::to_string(w));
  }
  return o;
}

}  // namespace

std::optional<std::filesystem::path> resolve_golden_dir(const VerifyOptions& options) {
  if (options.golden_dir) return options.golden_dir;
  if (const char* env = std::getenv("ETA_LAB_GOLDEN_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  if (options.workers == 0) throw InvalidArgument("workers must be >= 1");
  const auto golden = resolve_golden_dir(options);
  const bool quick = options.quick;
  struct Step {
    int id;
    const char* title;
    bool large;  // skipped in quick mode
    std::function<Outcome()> run;
  };
  const std::vector<Step> steps = {
      {1, "constants at K=1000", false, [] { return constants_check(); }},
      {2, "oracle equivalence", false, [] { return oracle_check(); }},
      {3, "structure properties", false, [] { return structure_check(); }},
      {4, "character densities x=10^6", true, [&] { return lemma_check(options.workers); }},
      {5, "least negative prime densities x=10^6", true, [&] { return pollack_check(options.workers); }},
      {6, "pair sign patterns x=10^5", false, [&] { return pattern_check(options.workers); }},
      {7, "fundamental discriminant count", false, [&] { return count_check(quick); }},
      {8, "eta average scan", false, [&] { return scan_check(options, golden); }},
      {9, "decomposition audit x=10^4", false, [&] { return audit_check(options, golden); }},
      {10, "least nonresidue average x=10^6", true, [] { return erdos_check(); }},
      {11, "worker determinism", false, [&] { return determinism_check(quick); }},
  };
  std::vector<CriterionResult> results;
  for (const Step& step : steps) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), step.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = step.id;
    r.title = step.title;
    if (quick && step.large) {
      r.status = Status::skip;
      r.measured = "skipped (quick)";
    } else {
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = step.run();
        r.status = o.status;
        r.measured = o.note.str();
      } catch (const std::exception& e) {
        r.status = Status::fail;
        r.measured = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  const char* tag = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP";
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s): ", tag, r.id, r.title.c_str(), r.seconds);
  return head + r.measured;
}

}  // namespace eta_lab
