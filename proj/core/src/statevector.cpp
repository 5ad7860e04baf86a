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

#include "iqpc/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "iqpc/random.hpp"

namespace iqpc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Probabilities smaller than this are floating-point residue of an exact
// zero; they are dropped and the survivors renormalized.
constexpr double kProbFloor = 1e-15;

void apply_h(StateVector& sv, std::uint32_t line) {
  const std::uint64_t bit = std::uint64_t{1} << line;
  const std::uint64_t size = std::uint64_t{1} << sv.n;
  for (std::uint64_t i = 0; i < size; i++) {
    if (i & bit) continue;
    const std::uint64_t j = i | bit;
    const std::complex<double> a = sv.amps[i];
    const std::complex<double> b = sv.amps[j];
    sv.amps[i] = (a + b) * kInvSqrt2;
    sv.amps[j] = (a - b) * kInvSqrt2;
  }
}

// Multiplies each amplitude by the gate's diagonal phase on the bits of the
// basis label restricted to the gate's lines.
void apply_diagonal(StateVector& sv, const Gate& g) {
  const auto lines = gate_lines(g);
  const std::uint64_t size = std::uint64_t{1} << sv.n;

  if (const auto* p = std::get_if<ParityGate>(&g)) {
    std::uint64_t mask = 0;
    for (auto l : p->lines) mask |= std::uint64_t{1} << l;
    const std::complex<double> even = p->theta.to_complex();
    const std::complex<double> odd = p->theta.negated().to_complex();
    for (std::uint64_t z = 0; z < size; z++) {
      sv.amps[z] *= (std::popcount(z & mask) % 2 == 0) ? even : odd;
    }
    return;
  }

  const DenseGate* d = std::get_if<DenseGate>(&g);
  DenseGate named_expansion;
  if (!d) {
    named_expansion = named_to_dense(std::get<NamedGate>(g));
    d = &named_expansion;
  }
  std::vector<std::complex<double>> table(d->table.size());
  for (std::size_t i = 0; i < table.size(); i++) table[i] = d->table[i].to_complex();

  for (std::uint64_t z = 0; z < size; z++) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < lines.size(); j++) {
      idx |= ((z >> lines[j]) & 1u) << j;
    }
    sv.amps[z] *= table[idx];
  }
}

void apply_gate_universal(StateVector& sv, const NamedGate& g) {
  if (g.kind == NamedKind::H) {
    apply_h(sv, g.lines[0]);
  } else {
    apply_diagonal(sv, Gate{g});
  }
}

void require_valid(const Circuit& c, std::uint32_t qubit_cap) {
  auto violations = validate(c);
  if (!violations.empty()) {
    throw std::invalid_argument("run_statevector: invalid circuit: " + violations.front().detail);
  }
  if (c.n_lines > qubit_cap) {
    throw CapExceeded("circuit has " + std::to_string(c.n_lines) +
                      " lines, statevector cap is " + std::to_string(qubit_cap));
  }
}

Distribution register_distribution(const StateVector& sv, const std::vector<std::uint32_t>& reg) {
  std::vector<double> probs(std::size_t{1} << reg.size(), 0.0);
  const std::uint64_t size = std::uint64_t{1} << sv.n;
  for (std::uint64_t z = 0; z < size; z++) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < reg.size(); j++) {
      key |= ((z >> reg[j]) & 1u) << j;
    }
    probs[key] += std::norm(sv.amps[z]);
  }

  double kept = 0;
  for (double p : probs) {
    if (p >= kProbFloor) kept += p;
  }
  Distribution out;
  out.width = static_cast<int>(reg.size());
  for (std::uint64_t key = 0; key < probs.size(); key++) {
    if (probs[key] >= kProbFloor) out.probs[key] = probs[key] / kept;
  }
  return out;
}

}  // namespace

double StateVector::norm_sq() const {
  double s = 0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

StateVector run_statevector(const Circuit& c, std::uint32_t qubit_cap) {
  require_valid(c, qubit_cap);

  StateVector sv;
  sv.n = c.n_lines;
  sv.amps.assign(std::uint64_t{1} << sv.n, {0, 0});
  sv.amps[0] = {1, 0};

  switch (c.kind) {
    case CircuitKind::universal:
      for (const Gate& g : c.gates) apply_gate_universal(sv, std::get<NamedGate>(g));
      break;
    case CircuitKind::iqp_z:
      for (std::uint32_t l = 0; l < sv.n; l++) apply_h(sv, l);
      for (const Gate& g : c.gates) apply_diagonal(sv, g);
      for (std::uint32_t l = 0; l < sv.n; l++) apply_h(sv, l);
      break;
    case CircuitKind::iqp_x:
      for (const Gate& g : c.gates) {
        for (auto l : gate_lines(g)) apply_h(sv, l);
        apply_diagonal(sv, g);
        for (auto l : gate_lines(g)) apply_h(sv, l);
      }
      break;
  }
  return sv;
}

Distribution joint_distribution(const Circuit& c, std::uint32_t qubit_cap) {
  StateVector sv = run_statevector(c, qubit_cap);
  std::vector<std::uint32_t> reg = c.output;
  reg.insert(reg.end(), c.postselect.begin(), c.postselect.end());
  return register_distribution(sv, reg);
}

Distribution conditional_distribution(const Circuit& c, std::uint32_t qubit_cap) {
  Distribution joint = joint_distribution(c, qubit_cap);
  if (c.postselect.empty()) return joint;

  const int m = static_cast<int>(c.output.size());
  // P = 0...0 outcomes are exactly the keys below 2^m (postselect bits are
  // the high positions of the concatenated register).
  const std::uint64_t limit = std::uint64_t{1} << m;
  double mass = 0;
  for (const auto& [key, p] : joint.probs) {
    if (key < limit) mass += p;
  }
  if (mass <= kZeroPostselectionThreshold) {
    throw ZeroPostselectionMass("prob[postselect = 0...0] = " + std::to_string(mass));
  }
  Distribution out;
  out.width = m;
  for (const auto& [key, p] : joint.probs) {
    if (key < limit) out.probs[key] = p / mass;
  }
  return out;
}

SampleBatch sample_bitchain(const Circuit& c, std::uint64_t seed, std::uint64_t shots,
                            std::uint32_t qubit_cap) {
  Distribution cond = conditional_distribution(c, qubit_cap);
  const int m = cond.width;

  // Prefix masses: mass[(j, q)] = prob[first j bits == q], so each bit's
  // conditional distribution is a quotient of two of these marginals.
  std::unordered_map<std::uint64_t, double> mass;
  mass.reserve(cond.probs.size() * static_cast<std::size_t>(m + 1));
  auto prefix_key = [](int j, std::uint64_t q) {
    return (static_cast<std::uint64_t>(j) << 58) | q;
  };
  for (const auto& [outcome, p] : cond.probs) {
    for (int j = 0; j <= m; j++) {
      const std::uint64_t q = outcome & ((std::uint64_t{1} << j) - 1);
      mass[prefix_key(j, q)] += p;
    }
  }

  SampleBatch batch;
  batch.seed = seed;
  batch.shots = shots;
  batch.width = m;
  for (std::uint64_t s = 0; s < shots; s++) {
    ShotRng rng(seed, s);
    std::uint64_t outcome = 0;
    for (int j = 0; j < m; j++) {
      auto denom_it = mass.find(prefix_key(j, outcome));
      const double denom = denom_it == mass.end() ? 0.0 : denom_it->second;
      auto num_it = mass.find(prefix_key(j + 1, outcome | (std::uint64_t{1} << j)));
      const double p_one = (denom <= 0 || num_it == mass.end()) ? 0.0 : num_it->second / denom;
      if (rng.next_double() < p_one) outcome |= std::uint64_t{1} << j;
    }
    batch.tallies[outcome]++;
  }
  return batch;
}

}  // namespace iqpc
