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

#include "iqpc/fast_sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "iqpc/compiler.hpp"
#include "iqpc/random.hpp"

namespace iqpc {

namespace {

constexpr double kProbFloor = 1e-15;

// Accumulator policies: exact mod-16 units for lattice-only circuits,
// radians otherwise.
struct LatticeOps {
  using Acc = std::uint8_t;
  static Acc add(Acc a, Acc b) { return static_cast<Acc>((a + b) & 15); }
  static Acc neg(Acc a) { return static_cast<Acc>((16 - a) & 15); }
  static Acc from(const PhaseValue& p) { return static_cast<Acc>(p.lattice_units()); }
  static std::complex<double> unit(Acc a) { return lattice_phase_table()[a]; }
};

struct RealOps {
  using Acc = double;
  static Acc add(Acc a, Acc b) { return a + b; }
  static Acc neg(Acc a) { return -a; }
  static Acc from(const PhaseValue& p) { return p.to_radians(); }
  static std::complex<double> unit(Acc a) { return std::polar(1.0, a); }
};

// In-place unnormalized Walsh-Hadamard transform.
void fwht(std::vector<std::complex<double>>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += len << 1) {
      for (std::size_t i = block; i < block + len; i++) {
        const std::complex<double> a = v[i];
        const std::complex<double> b = v[i + len];
        v[i] = a + b;
        v[i + len] = a - b;
      }
    }
  }
}

template <typename Ops>
void table_to_probs(std::span<const typename Ops::Acc> table,
                    std::vector<std::complex<double>>& scratch, std::vector<double>& probs) {
  scratch.resize(table.size());
  for (std::size_t x = 0; x < table.size(); x++) scratch[x] = Ops::unit(table[x]);
  fwht(scratch);
  const double scale = 1.0 / static_cast<double>(table.size());
  probs.resize(table.size());
  for (std::size_t x = 0; x < table.size(); x++) {
    probs[x] = std::norm(scratch[x] * scale);
  }
}

// Pre-partitioned view of an iqp-z circuit for repeated profile builds.
// Gates fully inside the output register are folded into a static table
// once; per-y0 work touches only the gates with some support off it.
template <typename Ops>
class ProfilePlan {
 public:
  using Acc = typename Ops::Acc;

  ProfilePlan(const Circuit& c, int output_cap) {
    if (c.kind != CircuitKind::iqp_z) {
      throw std::invalid_argument("phase profile requires an iqp-z circuit");
    }
    auto violations = validate(c);
    if (!violations.empty()) {
      throw std::invalid_argument("phase profile: invalid circuit: " + violations.front().detail);
    }
    m_ = static_cast<int>(c.output.size());
    if (m_ > output_cap) {
      throw CapExceeded("output register has " + std::to_string(m_) + " lines, cap is " +
                        std::to_string(output_cap));
    }

    // line -> x-bit position, or y index among non-output lines (ascending)
    std::vector<int> x_pos(c.n_lines, -1), y_idx(c.n_lines, -1);
    for (std::size_t i = 0; i < c.output.size(); i++) x_pos[c.output[i]] = static_cast<int>(i);
    n_y_ = 0;
    for (std::uint32_t l = 0; l < c.n_lines; l++) {
      if (x_pos[l] < 0) y_idx[l] = n_y_++;
    }

    static_table_.assign(std::size_t{1} << m_, Acc{});
    std::map<std::vector<int>, std::size_t> group_of;

    for (const Gate& g : c.gates) {
      const auto lines = gate_lines(g);
      std::vector<int> positions;  // x-bit positions this gate touches
      for (auto l : lines) {
        if (x_pos[l] >= 0) positions.push_back(x_pos[l]);
      }
      std::sort(positions.begin(), positions.end());

      PlannedGate pg;
      pg.parity = std::holds_alternative<ParityGate>(g);
      pg.sources.reserve(lines.size());
      for (auto l : lines) {
        if (x_pos[l] >= 0) {
          const auto rank = std::lower_bound(positions.begin(), positions.end(), x_pos[l]) -
                            positions.begin();
          pg.sources.push_back(static_cast<int>(rank));
        } else {
          pg.sources.push_back(~y_idx[l]);
        }
      }
      if (pg.parity) {
        const auto& par = std::get<ParityGate>(g);
        pg.table = {Ops::from(par.theta), Ops::neg(Ops::from(par.theta))};
      } else {
        const auto& d = std::get<DenseGate>(g);
        pg.table.reserve(d.table.size());
        for (const auto& p : d.table) pg.table.push_back(Ops::from(p));
      }

      if (positions.empty()) {
        y_gates_.push_back(std::move(pg));
      } else if (positions.size() == lines.size()) {
        // y0-independent: fold into the static table now
        fold_static(pg, positions);
      } else {
        auto [it, fresh] = group_of.try_emplace(positions, groups_.size());
        if (fresh) {
          groups_.push_back(Group{positions, {}});
          max_group_bits_ = std::max(max_group_bits_, positions.size());
        }
        groups_[it->second].gates.push_back(std::move(pg));
      }
    }
  }

  int output_bits() const { return m_; }
  int y_lines() const { return n_y_; }
  bool y_dependent() const { return !y_gates_.empty() || !groups_.empty(); }

  // Fills `table` (resized to 2^M) with the profile for y0 and returns the
  // fixed phase of the off-register gates.
  Acc build(std::span<const std::uint8_t> y0, std::vector<Acc>& table) const {
    if (std::cmp_not_equal(y0.size(), n_y_)) {
      throw std::invalid_argument("y0 has " + std::to_string(y0.size()) + " bits, expected " +
                                  std::to_string(n_y_));
    }
    Acc fixed{};
    for (const auto& pg : y_gates_) fixed = Ops::add(fixed, eval_fixed(pg, y0));

    table.assign(static_table_.begin(), static_table_.end());
    std::vector<Acc> accum;
    for (const auto& group : groups_) {
      accum.assign(std::size_t{1} << group.positions.size(), Acc{});
      for (const auto& pg : group.gates) add_gate(pg, y0, accum);

      // scatter the group accumulator across the full table
      const std::size_t size = table.size();
      for (std::size_t x = 0; x < size; x++) {
        std::size_t sub = 0;
        for (std::size_t j = 0; j < group.positions.size(); j++) {
          sub |= ((x >> group.positions[j]) & 1u) << j;
        }
        table[x] = Ops::add(table[x], accum[sub]);
      }
    }
    return fixed;
  }

 private:
  struct PlannedGate {
    bool parity = false;
    // per gate line: >=0 is a rank within the group sub-pattern, negative is
    // ~index into y0
    std::vector<int> sources;
    // dense: raw 2^arity phase table; parity: {even, odd}
    std::vector<Acc> table;
  };
  struct Group {
    std::vector<int> positions;  // sorted x-bit positions
    std::vector<PlannedGate> gates;
  };

  static std::uint64_t y_bits(const PlannedGate& pg, std::span<const std::uint8_t> y0) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < pg.sources.size(); j++) {
      if (pg.sources[j] < 0 && y0[static_cast<std::size_t>(~pg.sources[j])]) {
        bits |= std::uint64_t{1} << j;
      }
    }
    return bits;
  }

  Acc eval_fixed(const PlannedGate& pg, std::span<const std::uint8_t> y0) const {
    const std::uint64_t bits = y_bits(pg, y0);
    if (pg.parity) return pg.table[std::popcount(bits) & 1];
    return pg.table[bits];
  }

  void add_gate(const PlannedGate& pg, std::span<const std::uint8_t> y0,
                std::vector<Acc>& accum) const {
    const std::uint64_t base = y_bits(pg, y0);
    if (pg.parity) {
      const int y_par = std::popcount(base) & 1;
      for (std::size_t sub = 0; sub < accum.size(); sub++) {
        accum[sub] = Ops::add(accum[sub], pg.table[(std::popcount(sub) + y_par) & 1]);
      }
      return;
    }
    for (std::size_t sub = 0; sub < accum.size(); sub++) {
      std::uint64_t idx = base;
      for (std::size_t j = 0; j < pg.sources.size(); j++) {
        if (pg.sources[j] >= 0) {
          idx |= ((sub >> pg.sources[j]) & 1u) << j;
        }
      }
      accum[sub] = Ops::add(accum[sub], pg.table[idx]);
    }
  }

  void fold_static(const PlannedGate& pg, const std::vector<int>& positions) {
    for (std::size_t x = 0; x < static_table_.size(); x++) {
      std::uint64_t idx = 0;
      for (std::size_t j = 0; j < pg.sources.size(); j++) {
        // all sources are ranks here
        idx |= ((x >> positions[static_cast<std::size_t>(pg.sources[j])]) & 1u) << j;
      }
      const Acc v = pg.parity ? pg.table[std::popcount(idx) & 1] : pg.table[idx];
      static_table_[x] = Ops::add(static_table_[x], v);
    }
  }

  int m_ = 0;
  int n_y_ = 0;
  std::vector<Acc> static_table_;
  std::vector<PlannedGate> y_gates_;
  std::vector<Group> groups_;
  std::size_t max_group_bits_ = 0;
};

std::vector<std::uint8_t> bits_of(std::uint64_t value, int width) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(width));
  for (int j = 0; j < width; j++) out[static_cast<std::size_t>(j)] = (value >> j) & 1u;
  return out;
}

Distribution probs_to_distribution(int width, const std::vector<double>& probs) {
  double kept = 0;
  for (double p : probs) {
    if (p >= kProbFloor) kept += p;
  }
  Distribution out;
  out.width = width;
  for (std::size_t x = 0; x < probs.size(); x++) {
    if (probs[x] >= kProbFloor) out.probs[x] = probs[x] / kept;
  }
  return out;
}

void require_no_postselect(const Circuit& c, const char* who) {
  if (!c.postselect.empty()) {
    throw std::invalid_argument(std::string(who) +
                                ": post-selected circuits need the exact backend");
  }
}

}  // namespace

PhaseProfile::PhaseProfile(int output_bits, PhaseValue fixed_phase,
                           std::vector<PhaseValue> table) {
  if (table.size() != (std::size_t{1} << output_bits)) {
    throw std::invalid_argument("phase table must have 2^M entries");
  }
  m_ = output_bits;
  fixed_ = fixed_phase;
  lattice_ = fixed_phase.is_lattice();
  for (const auto& p : table) lattice_ &= p.is_lattice();
  if (lattice_) {
    lat_.reserve(table.size());
    for (const auto& p : table) lat_.push_back(static_cast<std::uint8_t>(p.lattice_units()));
  } else {
    rad_.reserve(table.size());
    for (const auto& p : table) rad_.push_back(p.to_radians());
  }
}

PhaseValue PhaseProfile::phase_at(std::uint64_t x) const {
  if (x >= (std::uint64_t{1} << m_)) throw std::invalid_argument("profile index out of range");
  return lattice_ ? PhaseValue::lattice(lat_[x]) : PhaseValue::radians(rad_[x]);
}

PhaseProfile PhaseProfile::from_lattice(int output_bits, std::uint8_t fixed,
                                        std::vector<std::uint8_t> table) {
  PhaseProfile p;
  p.m_ = output_bits;
  p.fixed_ = PhaseValue::lattice(fixed);
  p.lattice_ = true;
  p.lat_ = std::move(table);
  return p;
}

PhaseProfile PhaseProfile::from_radians(int output_bits, double fixed, std::vector<double> table) {
  PhaseProfile p;
  p.m_ = output_bits;
  p.fixed_ = PhaseValue::radians(fixed);
  p.lattice_ = false;
  p.rad_ = std::move(table);
  return p;
}

PhaseProfile phase_profile(const Circuit& c, std::span<const std::uint8_t> y0, int output_cap) {
  if (check_restricted_phases(c)) {
    ProfilePlan<LatticeOps> plan(c, output_cap);
    std::vector<std::uint8_t> table;
    const std::uint8_t fixed = plan.build(y0, table);
    return PhaseProfile::from_lattice(plan.output_bits(), fixed, std::move(table));
  }
  ProfilePlan<RealOps> plan(c, output_cap);
  std::vector<double> table;
  const double fixed = plan.build(y0, table);
  return PhaseProfile::from_radians(plan.output_bits(), fixed, std::move(table));
}

Distribution conditional_output_state(const PhaseProfile& p) {
  std::vector<std::complex<double>> scratch;
  std::vector<double> probs;
  if (p.on_lattice()) {
    table_to_probs<LatticeOps>(p.lattice_table(), scratch, probs);
  } else {
    table_to_probs<RealOps>(p.radian_table(), scratch, probs);
  }
  return probs_to_distribution(p.output_bits(), probs);
}

namespace {

template <typename Ops>
SampleBatch sample_fast_impl(const Circuit& c, std::uint64_t seed, std::uint64_t shots,
                             int output_cap) {
  ProfilePlan<Ops> plan(c, output_cap);
  const int n_y = plan.y_lines();

  SampleBatch batch;
  batch.seed = seed;
  batch.shots = shots;
  batch.width = plan.output_bits();

  std::vector<typename Ops::Acc> table;
  std::vector<std::complex<double>> scratch;
  std::vector<double> probs, cdf;
  std::vector<std::uint8_t> y0(static_cast<std::size_t>(n_y));

  const bool reusable = !plan.y_dependent();
  bool ready = false;

  auto rebuild_cdf = [&] {
    cdf.resize(probs.size() + 1);
    cdf[0] = 0;
    for (std::size_t i = 0; i < probs.size(); i++) cdf[i + 1] = cdf[i] + probs[i];
  };

  for (std::uint64_t s = 0; s < shots; s++) {
    ShotRng rng(seed, s);
    if (!reusable || !ready) {
      std::uint64_t word = 0;
      for (int j = 0; j < n_y; j++) {
        if (j % 64 == 0) word = rng.next_u64();
        y0[static_cast<std::size_t>(j)] = (word >> (j % 64)) & 1u;
      }
      plan.build(y0, table);
      table_to_probs<Ops>(table, scratch, probs);
      rebuild_cdf();
      ready = true;
    }
    const double u = rng.next_double() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - cdf.begin() - 1, 0));
    if (idx >= probs.size()) idx = probs.size() - 1;
    batch.tallies[idx]++;
  }
  return batch;
}

}  // namespace

SampleBatch sample_fast(const Circuit& c, std::uint64_t seed, std::uint64_t shots, int output_cap) {
  require_no_postselect(c, "sample_fast");
  if (check_restricted_phases(c)) {
    return sample_fast_impl<LatticeOps>(c, seed, shots, output_cap);
  }
  return sample_fast_impl<RealOps>(c, seed, shots, output_cap);
}

namespace {

template <typename Ops>
Distribution exact_average_impl(const Circuit& c, int enum_cap, int output_cap) {
  ProfilePlan<Ops> plan(c, output_cap);
  const int n_y = plan.y_lines();
  if (n_y > enum_cap) {
    throw CapExceeded("exact_average: " + std::to_string(n_y) +
                      " non-output lines exceed the enumeration bound " +
                      std::to_string(enum_cap));
  }

  std::vector<typename Ops::Acc> table;
  std::vector<std::complex<double>> scratch;
  std::vector<double> probs;
  std::vector<double> avg(std::size_t{1} << plan.output_bits(), 0.0);

  const std::uint64_t count = std::uint64_t{1} << n_y;
  for (std::uint64_t y = 0; y < count; y++) {
    const auto y0 = bits_of(y, n_y);
    plan.build(y0, table);
    table_to_probs<Ops>(table, scratch, probs);
    for (std::size_t x = 0; x < avg.size(); x++) avg[x] += probs[x];
  }
  const double inv = 1.0 / static_cast<double>(count);
  for (auto& p : avg) p *= inv;
  return probs_to_distribution(plan.output_bits(), avg);
}

}  // namespace

Distribution exact_average(const Circuit& c, int enum_cap, int output_cap) {
  require_no_postselect(c, "exact_average");
  if (check_restricted_phases(c)) {
    return exact_average_impl<LatticeOps>(c, enum_cap, output_cap);
  }
  return exact_average_impl<RealOps>(c, enum_cap, output_cap);
}

}  // namespace iqpc
