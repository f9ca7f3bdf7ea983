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
#include "eta_lab/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "eta_lab/error.hpp"
#include "eta_lab/kernels.hpp"
#include "eta_lab/kronecker.hpp"
#include "eta_lab/parallel.hpp"

namespace eta_lab {

namespace {

constexpr std::size_t kExampleLimit = 10;
constexpr std::uint64_t kWindowLimit = 131;  // p_32

std::uint64_t magnitude(std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

PrimeTable workspace_primes(std::uint64_t cap) {
  if (cap < 2) throw InvalidArgument("eta cap must be >= 2");
  return PrimeTable(std::max(cap, kWindowLimit));
}

BigRational ratio(std::uint64_t num, std::uint64_t den) {
  BigRational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

BigRational relative_error(const BigRational& observed, const BigRational& predicted) {
  BigRational e = abs(observed - predicted) / predicted;
  e.canonicalize();
  return e;
}

// eta for a pair whose window mask was empty: continue the scan at p_33.
std::uint64_t eta_past_window(std::int64_t d1, std::int64_t d2, const PrimeTable& primes, std::uint64_t cap) {
  const auto ps = primes.values();
  for (std::size_t t = kernels::kWindow; t < ps.size() && ps[t] <= cap; ++t) {
    const std::uint32_t p = ps[t];
    const Sign s = d2 % static_cast<std::int64_t>(p) == 0 ? kronecker(d1, p) : kronecker(d2, p);
    if (s == Sign::negative) return p;
  }
  throw CapExceededError("eta(" + std::to_string(d1) + ", " + std::to_string(d2) + ") exceeded cap " +
                             std::to_string(cap),
                         cap);
}

void check_within_cap(std::uint64_t p, std::int64_t d1, std::int64_t d2, std::uint64_t cap) {
  if (p > cap) {
    throw CapExceededError("eta(" + std::to_string(d1) + ", " + std::to_string(d2) + ") exceeded cap " +
                               std::to_string(cap),
                           cap);
  }
}

// Visits every included pair (D2 != 1) of a row as (j, eta, eta | D2).
template <typename Visit>
void visit_row_etas(const Workspace& ws, std::size_t i, std::size_t lo, std::size_t hi,
                    std::vector<std::uint8_t>& buffer, Visit&& visit) {
  const SignatureTable& sig = ws.signatures();
  const auto values = ws.discriminants().values();
  const auto neg = sig.negative();
  const auto zero = sig.zero();
  const std::uint64_t cap = ws.options().cap;
  // Index 0 of the table is D = 1.
  if (lo == 0) lo = 1;
  if (lo >= hi) return;
  const std::size_t len = hi - lo;
  if (buffer.size() < len) buffer.resize(len);
  kernels::active().first_negative_bit(neg[i], neg.subspan(lo, len), zero.subspan(lo, len),
                                       std::span<std::uint8_t>(buffer.data(), len));
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t j = lo + t;
    const std::uint8_t idx = buffer[t];
    if (idx != kernels::kUnresolved) {
      const std::uint64_t p = sig.window_prime(idx);
      check_within_cap(p, values[i], values[j], cap);
      visit(j, p, ((zero[j] >> idx) & 1u) != 0);
    } else {
      const std::uint64_t p = eta_past_window(values[i], values[j], ws.primes(), cap);
      visit(j, p, values[j] % static_cast<std::int64_t>(p) == 0);
    }
  }
}

// chi_D(p) for table entry j, from the signature when p is in the window.
Sign character_at(const Workspace& ws, std::size_t j, std::uint32_t p, int window_index) {
  if (window_index >= 0) {
    const std::uint32_t bit = std::uint32_t{1} << window_index;
    if (ws.signatures().negative()[j] & bit) return Sign::negative;
    if (ws.signatures().zero()[j] & bit) return Sign::zero;
    return Sign::positive;
  }
  return kronecker(ws.discriminants().values()[j], p);
}

}  // namespace

Workspace::Workspace(std::uint64_t x, ExperimentOptions options)
    : x_(x),
      options_(options),
      discriminants_(sieve_fundamental(x)),
      primes_(workspace_primes(options.cap)),
      signatures_(discriminants_, primes_, options.cap) {
  if (options_.workers == 0) throw InvalidArgument("workers must be >= 1");
}

BigRational zeta2_lower() {
  BigRational z(BigInt("1644934066848226436472415166646"), BigInt("1000000000000000000000000000000"));
  z.canonicalize();
  return z;
}

BigRational zeta2_upper() {
  BigRational z(BigInt("1644934066848226436472415166647"), BigInt("1000000000000000000000000000000"));
  z.canonicalize();
  return z;
}

PairCountReport pair_count_check(const Workspace& ws) {
  if (ws.x() < 2) throw InvalidArgument("pair_count_check: x must be >= 2");
  PairCountReport r;
  r.x = ws.x();
  for (const std::size_t c : pair_prefixes(ws.discriminants(), ws.x())) r.observed += c;
  const long double zeta2 = BigRational((zeta2_lower() + zeta2_upper()) / 2).get_d();
  const auto x = static_cast<long double>(ws.x());
  r.reference = static_cast<double>(x * std::log(x) / (zeta2 * zeta2));
  r.ratio = static_cast<double>(r.observed) / r.reference;
  return r;
}

HarmonicReport harmonic_sum_check(const Workspace& ws) {
  if (ws.x() < 2) throw InvalidArgument("harmonic_sum_check: x must be >= 2");
  HarmonicReport r;
  r.x = ws.x();
  // Balanced-tree summation keeps the operands of each addition comparable in size.
  const auto values = ws.discriminants().values();
  std::vector<BigRational> level;
  level.reserve(values.size());
  for (std::size_t i = 0; i < values.size();) {
    const std::uint64_t m = magnitude(values[i]);
    unsigned long multiplicity = 0;
    while (i < values.size() && magnitude(values[i]) == m) {
      ++multiplicity;
      ++i;
    }
    level.push_back(ratio(multiplicity, m));
  }
  while (level.size() > 1) {
    std::vector<BigRational> next((level.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < level.size(); k += 2) next[k / 2] = level[k] + level[k + 1];
    if (level.size() % 2 == 1) next.back() = level.back();
    level.swap(next);
  }
  r.sum = level.empty() ? BigRational(0) : level.front();
  const double zeta2 = BigRational((zeta2_lower() + zeta2_upper()) / 2).get_d();
  r.reference = std::log(static_cast<double>(ws.x())) / zeta2;
  r.ratio = r.sum.get_d() / r.reference;
  return r;
}

DensityReport density_lemma(const Workspace& ws, std::uint32_t p) {
  if (!is_prime_trial(p)) throw InvalidArgument("density_lemma: " + std::to_string(p) + " is not prime");
  const kernels::ResidueCharacter chi(p);
  const auto values = ws.discriminants().values();
  std::vector<std::int8_t> row(values.size());
  const auto& k = kernels::active();
  k.character_row(chi, values, row);
  const kernels::SignTally t = k.tally_signs(row);

  DensityReport r;
  r.experiment = "lemma p=" + std::to_string(p);
  r.x = ws.x();
  r.population = values.size();
  r.excluded_note = "none";
  const std::uint64_t n = r.population;
  const auto add = [&](std::string label, std::uint64_t count, BigRational predicted) {
    predicted.canonicalize();
    const BigRational observed = ratio(count, n);
    r.rows.push_back({std::move(label), count, observed, predicted, relative_error(observed, predicted)});
  };
  add("chi(" + std::to_string(p) + ")=+1", t.positive, BigRational(p, 2 * p + 2));
  add("chi(" + std::to_string(p) + ")=-1", t.negative, BigRational(p, 2 * p + 2));
  add("chi(" + std::to_string(p) + ")=0", t.zero, BigRational(1, p + 1));
  return r;
}

DensityReport density_pollack(const Workspace& ws, std::size_t k_max) {
  if (k_max == 0) throw InvalidArgument("density_pollack: k_max must be >= 1");
  if (k_max > ws.primes().size()) throw InvalidArgument("density_pollack: k_max exceeds the prime table");
  const auto least = ws.signatures().least_negative();
  const auto ps = ws.primes().values();
  std::vector<std::uint64_t> counts(k_max, 0);
  for (const std::uint32_t n : least) {
    if (n == 0) continue;
    const auto it = std::lower_bound(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(k_max), n);
    if (it != ps.begin() + static_cast<std::ptrdiff_t>(k_max) && *it == n) ++counts[static_cast<std::size_t>(it - ps.begin())];
  }

  DensityReport r;
  r.experiment = "pollack";
  r.x = ws.x();
  r.population = least.size() - 1;
  r.excluded = 1;
  r.excluded_note = "D = 1 (trivial character, n(D) undefined)";
  const double range = std::cbrt(std::log(static_cast<double>(ws.x())));
  r.outside_uniform_range = static_cast<double>(ps[k_max - 1]) > range;
  BigRational product = 1;
  for (std::size_t k = 0; k < k_max; ++k) {
    const unsigned long p = ps[k];
    BigRational predicted = BigRational(p, 2 * (p + 1)) * product;
    predicted.canonicalize();
    const BigRational observed = ratio(counts[k], r.population);
    r.rows.push_back({"n(D)=" + std::to_string(p), counts[k], observed, predicted, relative_error(observed, predicted)});
    product *= BigRational(p + 2, 2 * (p + 1));
    product.canonicalize();
  }
  return r;
}

DensityReport density_sign_pattern(const Workspace& ws, const std::vector<std::pair<std::uint32_t, Sign>>& pattern) {
  if (pattern.empty()) throw InvalidArgument("density_sign_pattern: empty pattern");
  std::set<std::uint32_t> seen;
  std::vector<int> window_index;
  std::string label;
  BigRational predicted = 1;
  const auto window = ws.signatures().window();
  for (const auto& [p, s] : pattern) {
    if (!is_prime_trial(p)) throw InvalidArgument("density_sign_pattern: " + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) {
      throw InvalidArgument("density_sign_pattern: prime " + std::to_string(p) + " repeated");
    }
    const auto it = std::find(window.begin(), window.end(), p);
    window_index.push_back(it == window.end() ? -1 : static_cast<int>(it - window.begin()));
    const unsigned long q = p;
    predicted *= s == Sign::zero ? BigRational(1, (q + 1) * (q + 1)) : BigRational(q * (q + 2), 2 * (q + 1) * (q + 1));
    predicted.canonicalize();
    if (!label.empty()) label += ",";
    label += std::to_string(p) + ":" + std::string(to_string(s));
  }

  const std::vector<std::size_t> prefix = pair_prefixes(ws.discriminants(), ws.x());
  const std::vector<PairBlock> blocks = plan_pair_blocks(prefix);
  struct Partial {
    std::uint64_t pairs = 0;
    std::uint64_t matches = 0;
  };
  const auto zero = ws.signatures().zero();
  const auto values = ws.discriminants().values();
  const auto partials = run_ordered<Partial>(blocks.size(), ws.options().workers, [&](std::size_t b) {
    Partial part;
    for_each_row(blocks[b], prefix, [&](std::size_t i, std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j < hi; ++j) {
        if (i == 0 && j == 0) continue;  // (1, 1)
        ++part.pairs;
        bool match = true;
        for (std::size_t t = 0; t < pattern.size() && match; ++t) {
          const std::uint32_t p = pattern[t].first;
          const int w = window_index[t];
          const bool divides = w >= 0 ? ((zero[j] >> w) & 1u) != 0 : values[j] % static_cast<std::int64_t>(p) == 0;
          const Sign s = divides ? character_at(ws, i, p, w) : character_at(ws, j, p, w);
          match = s == pattern[t].second;
        }
        if (match) ++part.matches;
      }
    });
    return part;
  });
  Partial total;
  for (const Partial& p : partials) {
    total.pairs += p.pairs;
    total.matches += p.matches;
  }

  DensityReport r;
  r.experiment = "sign pattern";
  r.x = ws.x();
  r.population = total.pairs;
  r.excluded = 1;
  r.excluded_note = "(D1, D2) = (1, 1) (both characters principal)";
  const BigRational observed = ratio(total.matches, total.pairs);
  r.rows.push_back({label, total.matches, observed, predicted, relative_error(observed, predicted)});
  return r;
}

PairScanReport scan_pairs(const Workspace& ws) {
  if (ws.x() < 100) throw InvalidArgument("scan_pairs: x must be >= 100");
  const std::vector<std::size_t> prefix = pair_prefixes(ws.discriminants(), ws.x());
  const std::vector<PairBlock> blocks = plan_pair_blocks(prefix);
  struct Partial {
    std::uint64_t total = 0;
    std::uint64_t excluded = 0;
    std::uint64_t sum = 0;
  };
  const auto partials = run_ordered<Partial>(blocks.size(), ws.options().workers, [&](std::size_t b) {
    Partial part;
    std::vector<std::uint8_t> buffer;
    for_each_row(blocks[b], prefix, [&](std::size_t i, std::size_t lo, std::size_t hi) {
      part.total += hi - lo;
      if (lo == 0) ++part.excluded;
      visit_row_etas(ws, i, lo, hi, buffer, [&](std::size_t, std::uint64_t eta, bool) { part.sum += eta; });
    });
    return part;
  });

  PairScanReport r;
  r.x = ws.x();
  for (const Partial& p : partials) {
    r.pairs_total += p.total;
    r.pairs_excluded += p.excluded;
    r.sum_eta += p.sum;
  }
  const std::uint64_t included = r.pairs_total - r.pairs_excluded;
  r.avg_eta = included == 0 ? BigRational(0) : ratio(r.sum_eta, included);
  const std::size_t K = ws.options().truncation;
  const PrimeTable primes = PrimeTable::with_count(K + 1);
  r.ref_theta = rigorous_constant(Series::theta, K, primes);
  r.ref_combined = combined_constant(K, primes);
  r.ref_big_theta = rigorous_constant(Series::big_theta, K, primes);
  return r;
}

AuditPair audit_pair(const NewformPair& pair, const PrimeTable& primes, std::uint64_t cap) {
  const auto eta_value = found_prime(eta(pair, primes, cap));
  if (!eta_value) {
    throw InvalidArgument("audit_pair: eta(" + std::to_string(pair.first().value()) + ", " +
                          std::to_string(pair.second().value()) + ") is not a prime within the cap");
  }
  AuditPair a;
  a.d1 = pair.first().value();
  a.d2 = pair.second().value();
  a.eta = *eta_value;
  a.divides = a.d2 % static_cast<std::int64_t>(a.eta) == 0;
  a.n_first = found_prime(least_negative_prime(pair.first(), primes, cap)).value_or(0);
  a.n_second = found_prime(least_negative_prime(pair.second(), primes, cap)).value_or(0);
  return a;
}

AuditReport decomposition_audit(const Workspace& ws, const std::vector<std::pair<std::int64_t, std::int64_t>>& probes) {
  if (ws.x() < 2) throw InvalidArgument("decomposition_audit: x must be >= 2");
  const std::vector<std::size_t> prefix = pair_prefixes(ws.discriminants(), ws.x());
  const std::vector<PairBlock> blocks = plan_pair_blocks(prefix);
  const auto least = ws.signatures().least_negative();
  const auto values = ws.discriminants().values();

  const auto partials = run_ordered<AuditReport>(blocks.size(), ws.options().workers, [&](std::size_t b) {
    AuditReport part;
    std::vector<std::uint8_t> buffer;
    for_each_row(blocks[b], prefix, [&](std::size_t i, std::size_t lo, std::size_t hi) {
      visit_row_etas(ws, i, lo, hi, buffer, [&](std::size_t j, std::uint64_t eta, bool divides) {
        ++part.pairs_included;
        part.lhs += eta;
        part.sum_n_second += least[j];
        if (divides) {
          ++part.dividing_pairs;
          part.sum_n_first_dividing += least[i];
          part.sum_n_second_dividing += least[j];
          if (eta != least[i]) {
            ++part.mismatch_count;
            if (part.mismatch_examples.size() < kExampleLimit) {
              part.mismatch_examples.push_back({values[i], values[j], eta, least[i], least[j], true});
            }
          }
        } else if (eta != least[j]) {
          ++part.non_dividing_violations;
        }
      });
    });
    return part;
  });

  AuditReport r;
  r.x = ws.x();
  for (const AuditReport& p : partials) {
    r.pairs_included += p.pairs_included;
    r.lhs += p.lhs;
    r.sum_n_second += p.sum_n_second;
    r.sum_n_first_dividing += p.sum_n_first_dividing;
    r.sum_n_second_dividing += p.sum_n_second_dividing;
    r.dividing_pairs += p.dividing_pairs;
    r.mismatch_count += p.mismatch_count;
    r.non_dividing_violations += p.non_dividing_violations;
    for (const AuditPair& e : p.mismatch_examples) {
      if (r.mismatch_examples.size() < kExampleLimit) r.mismatch_examples.push_back(e);
    }
  }
  const auto rhs = static_cast<std::int64_t>(r.sum_n_second + r.sum_n_first_dividing) -
                   static_cast<std::int64_t>(r.sum_n_second_dividing);
  r.difference = static_cast<std::int64_t>(r.lhs) - rhs;

  for (const auto& [d1, d2] : probes) {
    AuditProbe probe;
    probe.d1 = d1;
    probe.d2 = d2;
    const NewformPair pair(d1, d2);
    probe.in_range = magnitude(d1) * magnitude(d2) <= ws.x();
    if (!pair.second().is_trivial()) {
      probe.detail = audit_pair(pair, ws.primes(), ws.options().cap);
      probe.mismatch = probe.detail->divides && probe.detail->eta != probe.detail->n_first;
    }
    r.probes.push_back(probe);
  }
  return r;
}

AverageReport average_least_negative(const Workspace& ws) {
  AverageReport r;
  r.statistic = "n(D)";
  r.x = ws.x();
  for (const std::uint32_t n : ws.signatures().least_negative()) {
    if (n == 0) {
      ++r.excluded;
      continue;
    }
    ++r.population;
    r.total += n;
  }
  if (r.population == 0) throw InvalidArgument("average_least_negative: no discriminants besides 1");
  r.average = ratio(r.total, r.population);
  r.reference = rigorous_constant(Series::big_theta, ws.options().truncation);
  return r;
}

AverageReport average_least_nonresidue(std::uint64_t x, std::size_t truncation) {
  if (x < 3) throw InvalidArgument("average_least_nonresidue: x must be >= 3");
  AverageReport r;
  r.statistic = "n_1(p)";
  r.x = x;
  const PrimeTable primes(x);
  for (const std::uint32_t p : primes.values()) {
    if (p == 2) {
      ++r.excluded;
      continue;
    }
    ++r.population;
    r.total += least_nonresidue(p);
  }
  r.average = ratio(r.total, r.population);
  r.reference = rigorous_constant(Series::erdos, truncation);
  return r;
}

}  // namespace eta_lab
