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

#include "iqpc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "iqpc/errors.hpp"

namespace iqpc {

namespace {

void require_same_width(const Distribution& p, const Distribution& r, const char* who) {
  if (p.width != r.width) {
    throw std::invalid_argument(std::string(who) + ": width mismatch (" +
                                std::to_string(p.width) + " vs " + std::to_string(r.width) + ")");
  }
}

std::set<std::uint64_t> support_union(const Distribution& p, const Distribution& r) {
  std::set<std::uint64_t> keys;
  for (const auto& [k, v] : p.probs) {
    if (v > 0) keys.insert(k);
  }
  for (const auto& [k, v] : r.probs) {
    if (v > 0) keys.insert(k);
  }
  return keys;
}

}  // namespace

RatioResult multiplicative_ratio(const Distribution& p, const Distribution& r) {
  require_same_width(p, r, "multiplicative_ratio");
  RatioResult out;
  for (std::uint64_t key : support_union(p, r)) {
    const double a = p.prob(key);
    const double b = r.prob(key);
    if (a <= 0 || b <= 0) {
      // one side is zero, the other positive: no finite c works
      return {true, 0, key};
    }
    const double ratio = std::max(a / b, b / a);
    if (ratio > out.c_min) {
      out.c_min = ratio;
      out.witness = key;
    }
  }
  return out;
}

double tv_distance(const Distribution& p, const Distribution& r) {
  require_same_width(p, r, "tv_distance");
  double sum = 0;
  for (std::uint64_t key : support_union(p, r)) {
    sum += std::abs(p.prob(key) - r.prob(key));
  }
  return sum;
}

Distribution postselected_statistic(const Distribution& joint, int output_bits) {
  if (output_bits < 0 || output_bits > joint.width) {
    throw std::invalid_argument("postselected_statistic: bad register split");
  }
  // P = 0...0 outcomes are exactly the keys below 2^output_bits
  const std::uint64_t limit = std::uint64_t{1} << output_bits;
  double mass = 0;
  for (const auto& [key, v] : joint.probs) {
    if (key < limit) mass += v;
  }
  if (mass <= kZeroPostselectionThreshold) {
    throw ZeroPostselectionMass("prob[postselect = 0...0] = " + std::to_string(mass));
  }
  Distribution out;
  out.width = output_bits;
  for (const auto& [key, v] : joint.probs) {
    if (key < limit && v != 0) out.probs[key] = v / mass;
  }
  return out;
}

SandwichResult sandwich_check(const Distribution& s, const Distribution& s_tilde, double c) {
  if (c < 1) throw std::invalid_argument("sandwich_check: c must be >= 1");
  std::set<std::uint64_t> a, b;
  for (const auto& [k, _] : s.probs) a.insert(k);
  for (const auto& [k, _] : s_tilde.probs) b.insert(k);
  if (a != b) throw std::invalid_argument("sandwich_check: key sets differ");

  constexpr double kTol = 1e-12;
  const double c2 = c * c;
  SandwichResult out;
  for (std::uint64_t key : a) {
    const double sv = s.prob(key);
    const double tv = s_tilde.prob(key);
    const double low_break = sv / c2 - tv;   // > 0 means the lower bound failed
    const double high_break = tv - c2 * sv;  // > 0 means the upper bound failed
    const double worst = std::max(low_break, high_break);
    if (worst > kTol && worst > out.worst_violation) {
      out.holds = false;
      out.worst_violation = worst;
      out.worst_outcome = key;
    }
  }
  return out;
}

double exact_sandwich_ratio(const Distribution& p_joint, const Distribution& r_joint,
                            int output_bits) {
  require_same_width(p_joint, r_joint, "exact_sandwich_ratio");
  const std::uint64_t limit = std::uint64_t{1} << output_bits;

  double c = 1.0;
  double p_mass = 0, r_mass = 0;
  for (std::uint64_t key : support_union(p_joint, r_joint)) {
    if (key >= limit) continue;
    const double a = p_joint.prob(key);
    const double b = r_joint.prob(key);
    if (a <= 0 || b <= 0) return std::numeric_limits<double>::infinity();
    c = std::max(c, std::max(a / b, b / a));
    p_mass += a;
    r_mass += b;
  }
  if (p_mass <= 0 || r_mass <= 0) return std::numeric_limits<double>::infinity();
  return std::max(c, std::max(p_mass / r_mass, r_mass / p_mass));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::accept:
      return "accept";
    case Verdict::reject:
      return "reject";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

DecisionOutcome decide(const Circuit& c, double delta, std::uint32_t qubit_cap) {
  if (c.output.size() != 1) {
    throw std::invalid_argument("decide: output register must be a single line");
  }
  if (!(delta > 0 && delta < 0.5)) {
    throw std::invalid_argument("decide: delta must lie in (0, 1/2)");
  }
  Distribution cond = conditional_distribution(c, qubit_cap);
  DecisionOutcome out;
  out.s1 = cond.prob(1);
  out.delta_used = delta;
  if (out.s1 >= 0.5 + delta) {
    out.verdict = Verdict::accept;
  } else if (out.s1 <= 0.5 - delta) {
    out.verdict = Verdict::reject;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

std::uint64_t hoeffding_shots(double precision, double gamma) {
  if (!(precision > 0 && precision < 1) || !(gamma > 0 && gamma < 1)) {
    throw std::invalid_argument("hoeffding_shots: precision and gamma must lie in (0,1)");
  }
  const double s = std::log(2.0 / gamma) / (2.0 * precision * precision);
  if (s >= 9.2e18) throw std::overflow_error("hoeffding_shots: shot count overflows");
  return static_cast<std::uint64_t>(std::ceil(s));
}

namespace {

// Two-sided tail probability of a 5-sigma normal deviation.
const double kFiveSigmaAlpha = std::erfc(5.0 / std::numbers::sqrt2);

double binary_kl(double q, double p) {
  double kl = 0;
  if (q > 0) kl += q * std::log(q / p);
  if (q < 1) kl += (1 - q) * std::log((1 - q) / (1 - p));
  return kl;
}

// Two-sided p-value for observing `count` successes in `shots` draws at
// success probability p. Normal approximation when the expected counts are
// healthy; otherwise a Chernoff bound on the exact binomial tail, which
// over-covers (never flags more than the exact test would).
double binomial_p_value(std::uint64_t count, std::uint64_t shots, double p, double z) {
  const double expected = static_cast<double>(shots) * p;
  const double expected_miss = static_cast<double>(shots) * (1 - p);
  if (std::min(expected, expected_miss) >= 25.0) {
    return std::erfc(std::abs(z) / std::numbers::sqrt2);
  }
  const double q = static_cast<double>(count) / static_cast<double>(shots);
  if (q == p) return 1.0;
  const double tail = std::exp(-static_cast<double>(shots) * binary_kl(q, p));
  return std::min(1.0, 2.0 * tail);
}

}  // namespace

EmpiricalReport empirical_check(const SampleBatch& batch, const Distribution& truth) {
  if (batch.width != truth.width) {
    throw std::invalid_argument("empirical_check: width mismatch");
  }
  EmpiricalReport report;
  report.alpha = kFiveSigmaAlpha;
  if (batch.shots == 0) {
    report.status = EmpiricalReport::Status::insufficient_data;
    return report;
  }

  std::set<std::uint64_t> keys;
  for (const auto& [k, v] : truth.probs) {
    if (v > 0) keys.insert(k);
  }
  for (const auto& [k, n] : batch.tallies) {
    if (n > 0) keys.insert(k);
  }
  report.threshold = report.alpha / static_cast<double>(std::max<std::size_t>(keys.size(), 1));

  const double shots = static_cast<double>(batch.shots);
  bool all_pass = true;
  for (std::uint64_t key : keys) {
    OutcomeCheck oc;
    oc.outcome = key;
    auto it = batch.tallies.find(key);
    oc.count = it == batch.tallies.end() ? 0 : it->second;
    const double p = truth.prob(key);
    oc.expected = shots * p;
    report.tv += std::abs(static_cast<double>(oc.count) / shots - p);

    if (p <= 0) {
      // impossible outcome observed
      oc.z = std::numeric_limits<double>::infinity();
      oc.p_value = 0;
      oc.pass = false;
    } else if (p >= 1) {
      oc.pass = (oc.count == batch.shots);
      oc.z = oc.pass ? 0 : std::numeric_limits<double>::infinity();
      oc.p_value = oc.pass ? 1 : 0;
    } else {
      const double sigma = std::sqrt(shots * p * (1 - p));
      oc.z = (static_cast<double>(oc.count) - oc.expected) / sigma;
      oc.p_value = binomial_p_value(oc.count, batch.shots, p, oc.z);
      oc.pass = oc.p_value >= report.threshold;
    }
    all_pass &= oc.pass;
    report.outcomes.push_back(oc);
  }
  report.status = all_pass ? EmpiricalReport::Status::pass : EmpiricalReport::Status::fail;
  return report;
}

std::string format_report(const EmpiricalReport& r) {
  std::string out;
  char buf[160];
  const char* status = r.status == EmpiricalReport::Status::pass   ? "pass"
                       : r.status == EmpiricalReport::Status::fail ? "fail"
                                                                   : "insufficient data";
  std::snprintf(buf, sizeof buf, "empirical check: %s (tv %.6g, per-outcome alpha %.3g)\n", status,
                r.tv, r.threshold);
  out += buf;
  for (const auto& oc : r.outcomes) {
    std::snprintf(buf, sizeof buf, "  outcome %llu: count %llu expected %.2f z %+.3f %s\n",
                  static_cast<unsigned long long>(oc.outcome),
                  static_cast<unsigned long long>(oc.count), oc.expected, oc.z,
                  oc.pass ? "ok" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace iqpc
