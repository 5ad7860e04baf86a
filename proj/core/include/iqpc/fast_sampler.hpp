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

#ifndef IQPC_FAST_SAMPLER_HPP
#define IQPC_FAST_SAMPLER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "iqpc/circuit.hpp"
#include "iqpc/distribution.hpp"
#include "iqpc/errors.hpp"

namespace iqpc {

/// Bound on the output-register size M; the sampler's transform costs
/// O(M * 2^M) per shot.
inline constexpr int kDefaultOutputCap = 24;

/// Bound on the non-output register size N for exact enumeration.
inline constexpr int kDefaultEnumCap = 20;

/// The diagonal phase of an iqp-z circuit restricted to one assignment y0 of
/// the non-output lines: table[x] accumulates the phases of every gate that
/// touches the output register, evaluated on the combined label (x, y0);
/// gates supported entirely off the output register contribute only the
/// scalar fixed_phase (a global phase of the conditional state, so it never
/// reaches a probability).
///
/// Lattice-only circuits keep the table as exact mod-16 integers internally.
class PhaseProfile {
 public:
  PhaseProfile(int output_bits, PhaseValue fixed_phase, std::vector<PhaseValue> table);

  int output_bits() const { return m_; }
  PhaseValue fixed_phase() const { return fixed_; }
  PhaseValue phase_at(std::uint64_t x) const;
  bool on_lattice() const { return lattice_; }

  const std::vector<std::uint8_t>& lattice_table() const { return lat_; }
  const std::vector<double>& radian_table() const { return rad_; }

  static PhaseProfile from_lattice(int output_bits, std::uint8_t fixed,
                                   std::vector<std::uint8_t> table);
  static PhaseProfile from_radians(int output_bits, double fixed, std::vector<double> table);

 private:
  PhaseProfile() = default;
  int m_ = 0;
  PhaseValue fixed_;
  bool lattice_ = true;
  std::vector<std::uint8_t> lat_;
  std::vector<double> rad_;
};

/// Builds the phase profile of an iqp-z circuit for one assignment of the
/// non-output lines. y0[j] (0/1) is the value of the j-th non-output line in
/// ascending line order. Cost is O(sum_g 2^overlap(g, output)) table updates
/// plus O(gates) scalar work.
/// Throws std::invalid_argument on wrong kind or y0 length mismatch, and
/// CapExceeded when the output register exceeds `output_cap`.
PhaseProfile phase_profile(const Circuit& c, std::span<const std::uint8_t> y0,
                           int output_cap = kDefaultOutputCap);

/// Distribution of the output register conditioned on the profile's y0:
/// amplitude a[x'] = 2^-M * sum_x (-1)^{x.x'} e^{i table[x]} (the trailing
/// Hadamards as a normalized Walsh-Hadamard transform), probability
/// |a[x']|^2. The fixed phase cancels.
Distribution conditional_output_state(const PhaseProfile& p);

/// Theorem-style fast weak simulation: per shot, draw y0 uniformly, build
/// the profile, and sample the output register from its conditional state.
/// The induced distribution is exactly the circuit's output marginal; the
/// per-shot cost does not depend on the number of non-output lines beyond
/// generating y0. Deterministic per (seed, shots).
/// Requires an iqp-z circuit with an empty postselect register.
SampleBatch sample_fast(const Circuit& c, std::uint64_t seed, std::uint64_t shots,
                        int output_cap = kDefaultOutputCap);

/// The exact output marginal as the uniform average over all 2^N
/// assignments y0. Requires N <= enum_cap.
Distribution exact_average(const Circuit& c, int enum_cap = kDefaultEnumCap,
                           int output_cap = kDefaultOutputCap);

}  // namespace iqpc

#endif
