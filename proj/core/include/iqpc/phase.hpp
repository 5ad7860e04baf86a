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

#ifndef IQPC_PHASE_HPP
#define IQPC_PHASE_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace iqpc {

/// A phase angle, either exact on the pi/8 lattice (an integer t mod 16,
/// meaning e^{i*pi*t/8}) or an arbitrary real angle in radians.
///
/// Lattice values stay exact under addition and negation, which keeps the
/// restricted gate alphabet {Z, CZ, P} free of rounding; anything off the
/// lattice falls back to the Real variant.
class PhaseValue {
 public:
  /// Exact lattice phase e^{i*pi*t/8}; t is reduced mod 16.
  static PhaseValue lattice(std::int64_t t);

  /// General phase e^{i*theta}; theta is reduced to [0, 2*pi).
  /// Throws std::invalid_argument if theta is not finite.
  static PhaseValue radians(double theta);

  /// Defaults to lattice zero (the identity phase).
  PhaseValue() = default;

  bool is_lattice() const { return is_lattice_; }

  /// Lattice units in 0..15. Only valid when is_lattice().
  int lattice_units() const;

  /// The angle in radians, for either variant.
  double to_radians() const;

  std::complex<double> to_complex() const;

  /// Additive inverse: e^{-i*angle}. Lattice stays lattice.
  PhaseValue negated() const;

  bool operator==(const PhaseValue& other) const = default;

 private:
  bool is_lattice_ = true;
  int units_ = 0;     // lattice variant, 0..15
  double theta_ = 0;  // real variant, [0, 2*pi)
};

/// Phase composition. Lattice + Lattice stays exact (mod-16 sum); any Real
/// operand degrades the result to Real.
PhaseValue phase_add(PhaseValue a, PhaseValue b);

/// The 16 lattice phases as complex values. Entries at multiples of 4 are
/// exact (1, i, -1, -i); to_complex(lattice(0)) == 1.0 exactly.
const std::array<std::complex<double>, 16>& lattice_phase_table();

}  // namespace iqpc

#endif
