// Copyright 2026 The iqpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IQPC_METRICS_HPP
#define IQPC_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iqpc/circuit.hpp"
#include "iqpc/distribution.hpp"
#include "iqpc/statevector.hpp"

namespace iqpc {

/// Smallest c >= 1 with p(x)/c <= r(x) <= c*p(x) for all x, i.e. the
/// multiplicative error between two distributions. Unbounded when some
/// outcome has positive probability on exactly one side; outcomes absent
/// from both are vacuous and ignored.
struct RatioResult {
  bool unbounded = false;
  double c_min = 1.0;            // valid when !unbounded
  std::uint64_t witness = 0;     // outcome achieving the extreme ratio (or the support gap)
};

RatioResult multiplicative_ratio(const Distribution& p, const Distribution& r);

/// Total variation in the unhalved convention: sum_x |p(x) - r(x)|, so
/// disjoint-support distributions are at distance 2. (The halved convention
/// divides this by two; callers comparing against such thresholds must
/// account for the factor themselves.)
double tv_distance(const Distribution& p, const Distribution& r);

/// The post-selected statistic S(x) = prob[O = x & P = 0...0] / prob[P = 0...0]
/// from a joint distribution over (output ++ postselect) bits; `output_bits`
/// says how many low bits are the output register. The result is a
/// normalized distribution over the output outcomes.
/// Throws ZeroPostselectionMass when the denominator vanishes.
Distribution postselected_statistic(const Distribution& joint, int output_bits);

struct SandwichResult {
  bool holds = true;
  std::uint64_t worst_outcome = 0;
  double worst_violation = 0;  // largest amount by which a bound was broken
};

/// Checks (1/c^2) * s(x) <= s_tilde(x) <= c^2 * s(x) for every x, with a
/// 1e-12 slack on the comparisons. The maps must have identical key sets.
SandwichResult sandwich_check(const Distribution& s, const Distribution& s_tilde, double c);

/// The tightest c for which the post-selected sandwich is guaranteed between
/// two joints: the extreme ratio over the P = 0...0 slice entries and over
/// the postselection masses themselves. +infinity on support mismatch.
double exact_sandwich_ratio(const Distribution& p_joint, const Distribution& r_joint,
                            int output_bits);

enum class Verdict : std::uint8_t { accept, reject, inconclusive };

const char* verdict_name(Verdict v);

/// Decision semantics for a single-line output register at margin delta:
/// accept iff S(1) >= 1/2 + delta, reject iff S(1) <= 1/2 - delta.
struct DecisionOutcome {
  Verdict verdict = Verdict::inconclusive;
  double s1 = 0;
  double delta_used = 0;
};

/// Computes S(1) exactly via the dense oracle and applies the thresholds.
/// Throws std::invalid_argument unless the output register has exactly one
/// line and delta is in (0, 1/2); ZeroPostselectionMass as usual.
DecisionOutcome decide(const Circuit& c, double delta,
                       std::uint32_t qubit_cap = kDefaultQubitCap);

/// Smallest shot count s with 2*exp(-2*s*precision^2) <= gamma, i.e. enough
/// samples to estimate an outcome probability to within `precision` with
/// confidence 1 - gamma (Chernoff-Hoeffding).
std::uint64_t hoeffding_shots(double precision, double gamma);

/// Per-outcome agreement between sampled tallies and an exact distribution.
struct OutcomeCheck {
  std::uint64_t outcome = 0;
  std::uint64_t count = 0;
  double expected = 0;
  double z = 0;         // normal score against the binomial expectation
  double p_value = 1;   // two-sided
  bool pass = true;
};

struct EmpiricalReport {
  enum class Status : std::uint8_t { pass, fail, insufficient_data };
  Status status = Status::pass;
  double tv = 0;        // empirical total variation (unhalved)
  double alpha = 0;     // per-report false-alarm budget (5-sigma two-sided)
  double threshold = 0; // alpha / #outcomes (Bonferroni)
  std::vector<OutcomeCheck> outcomes;
};

/// Binomial z-test per outcome at a 5-sigma family-wise level, Bonferroni
/// corrected across outcomes. Small expected counts fall back to a
/// Chernoff-style exact tail bound instead of the normal approximation.
EmpiricalReport empirical_check(const SampleBatch& batch, const Distribution& truth);

std::string format_report(const EmpiricalReport& r);

}  // namespace iqpc

#endif
