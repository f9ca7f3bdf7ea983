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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eta_lab/constants.hpp"
#include "eta_lab/discriminant.hpp"
#include "eta_lab/newform.hpp"
#include "eta_lab/primes.hpp"
#include "eta_lab/rational.hpp"
#include "eta_lab/signature.hpp"
#include "eta_lab/sign.hpp"

namespace eta_lab {

struct ExperimentOptions {
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
  std::size_t truncation = kDefaultTruncation;
};

/// Immutable tables shared by the experiments at one bound x.
class Workspace {
 public:
  Workspace(std::uint64_t x, ExperimentOptions options = {});

  std::uint64_t x() const noexcept { return x_; }
  const ExperimentOptions& options() const noexcept { return options_; }
  const DiscriminantTable& discriminants() const noexcept { return discriminants_; }
  const PrimeTable& primes() const noexcept { return primes_; }
  const SignatureTable& signatures() const noexcept { return signatures_; }

 private:
  std::uint64_t x_;
  ExperimentOptions options_;
  DiscriminantTable discriminants_;
  PrimeTable primes_;
  SignatureTable signatures_;
};

/// zeta(2) = pi^2/6 enclosed between 30-digit rationals; reference columns only.
BigRational zeta2_lower();
BigRational zeta2_upper();

struct PairCountReport {
  std::uint64_t x = 0;
  std::uint64_t observed = 0;
  double reference = 0;  // x log x / zeta(2)^2
  double ratio = 0;
};

/// Ordered pairs of fundamental discriminants with |D1 D2| <= x, by prefix counts.
PairCountReport pair_count_check(const Workspace& ws);

struct HarmonicReport {
  std::uint64_t x = 0;
  BigRational sum;   // sum over |D| <= x of 1/|D|, exact
  double reference = 0;  // log x / zeta(2)
  double ratio = 0;
};

HarmonicReport harmonic_sum_check(const Workspace& ws);

struct DensityRow {
  std::string label;
  std::uint64_t count = 0;
  BigRational observed;
  BigRational predicted;
  BigRational relative_error;
};

struct DensityReport {
  std::string experiment;
  std::uint64_t x = 0;
  std::uint64_t population = 0;
  std::uint64_t excluded = 0;
  std::string excluded_note;
  std::vector<DensityRow> rows;
  bool outside_uniform_range = false;
};

/// Proportions of chi_D(p) = +1, -1, 0 over all |D| <= x (D = 1 included)
/// against p/(2p+2), p/(2p+2), 1/(p+1).
DensityReport density_lemma(const Workspace& ws, std::uint32_t p);

/// Proportion of D != 1 with n(D) = p_k for k = 1..k_max against
/// p_k/(2(p_k+1)) prod_{j<k} (p_j+2)/(2(p_j+1)).
DensityReport density_pollack(const Workspace& ws, std::size_t k_max);

/// Proportion of ordered pairs (D1, D2) != (1, 1) with |D1 D2| <= x whose
/// coefficient sign at each listed prime matches, against the product of
/// 1/(p+1)^2 for sign 0 and p(p+2)/(2(p+1)^2) otherwise.
DensityReport density_sign_pattern(const Workspace& ws, const std::vector<std::pair<std::uint32_t, Sign>>& pattern);

struct PairScanReport {
  std::uint64_t x = 0;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_excluded = 0;  // D2 = 1, where eta is Never
  std::uint64_t sum_eta = 0;
  BigRational avg_eta;
  RigorousValue ref_theta;
  RigorousValue ref_combined;
  RigorousValue ref_big_theta;
};

/// Sum and mean of eta over all ordered pairs with |D1 D2| <= x and D2 != 1.
PairScanReport scan_pairs(const Workspace& ws);

struct AuditPair {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::uint64_t eta = 0;
  std::uint64_t n_first = 0;   // n(D1), 0 when D1 = 1
  std::uint64_t n_second = 0;  // n(D2)
  bool divides = false;        // eta | D2
  friend bool operator==(const AuditPair&, const AuditPair&) = default;
};

struct AuditProbe {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  bool in_range = false;
  std::optional<AuditPair> detail;  // empty when D2 = 1
  bool mismatch = false;            // eta | D2 and eta != n(D1)
};

/// Exact audit of
///   sum eta = sum n(D2) + sum_{eta|D2} n(D1) - sum_{eta|D2} n(D2)
/// over pairs with D2 != 1.
struct AuditReport {
  std::uint64_t x = 0;
  std::uint64_t pairs_included = 0;
  std::uint64_t lhs = 0;                    // sum eta
  std::uint64_t sum_n_second = 0;           // sum n(D2)
  std::uint64_t sum_n_first_dividing = 0;   // sum_{eta | D2} n(D1)
  std::uint64_t sum_n_second_dividing = 0;  // sum_{eta | D2} n(D2)
  std::int64_t difference = 0;              // lhs - rhs
  std::uint64_t dividing_pairs = 0;         // #{eta | D2}
  std::uint64_t mismatch_count = 0;         // #{eta | D2, eta != n(D1)}
  std::uint64_t non_dividing_violations = 0;  // #{eta does not divide D2, eta != n(D2)}
  std::vector<AuditPair> mismatch_examples;   // first ten in scan order
  std::vector<AuditProbe> probes;
};

/// Classification of a single pair, the same rule the audit aggregates.
AuditPair audit_pair(const NewformPair& pair, const PrimeTable& primes, std::uint64_t cap);

AuditReport decomposition_audit(const Workspace& ws, const std::vector<std::pair<std::int64_t, std::int64_t>>& probes = {});

struct AverageReport {
  std::string statistic;
  std::uint64_t x = 0;
  std::uint64_t population = 0;
  std::uint64_t excluded = 0;
  std::uint64_t total = 0;
  BigRational average;
  RigorousValue reference;
};

/// Mean of n(D) over 1 < |D| <= x, against Theta.
AverageReport average_least_negative(const Workspace& ws);

/// Mean of n_1(p) over odd primes p <= x, against sum p_k / 2^k.
AverageReport average_least_nonresidue(std::uint64_t x, std::size_t truncation = kDefaultTruncation);

}  // namespace eta_lab
