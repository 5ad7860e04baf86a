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

#ifndef IQPC_GATE_HPP
#define IQPC_GATE_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "iqpc/phase.hpp"

namespace iqpc {

inline constexpr std::size_t kDefaultDenseArityCap = 10;

/// Diagonal gate given by an explicit phase table: entry j is the phase
/// applied to the basis label whose bits on `lines` spell j little-endian
/// (bit i of j = the bit on lines[i]).
struct DenseGate {
  std::vector<std::uint32_t> lines;  // ordered, distinct
  std::vector<PhaseValue> table;     // exactly 2^lines.size() entries

  bool operator==(const DenseGate&) const = default;
};

/// Parity-phase gate: e^{+i*theta} on even-parity basis labels of its line
/// set, e^{-i*theta} on odd-parity ones. Equivalent to exp(i*theta*X...X)
/// conjugated into whichever basis the circuit kind implies.
struct ParityGate {
  PhaseValue theta;
  std::vector<std::uint32_t> lines;  // nonempty, distinct

  bool operator==(const ParityGate&) const = default;
};

enum class NamedKind : std::uint8_t { H, Z, CZ, P };

/// One of the universal-set gates {H, Z, CZ, P}. Z, CZ and P are diagonal
/// with pi/8-lattice entries; H is the only non-diagonal gate in the IR.
struct NamedGate {
  NamedKind kind;
  std::vector<std::uint32_t> lines;  // 1 line (H, Z, P) or 2 distinct (CZ)

  bool operator==(const NamedGate&) const = default;
};

using Gate = std::variant<DenseGate, ParityGate, NamedGate>;

std::span<const std::uint32_t> gate_lines(const Gate& g);
std::size_t gate_arity(const Gate& g);

/// Diagonal phase of a Dense or Parity gate on the given restriction of a
/// basis label to the gate's lines (bit i of `bits` = the bit on the i-th
/// listed line). Throws std::invalid_argument for Named gates or when
/// `bits` has set bits beyond the gate's arity.
PhaseValue gate_phase(const Gate& g, std::uint64_t bits);

/// Exact expansion of a parity-phase gate into its 2^k phase table.
DenseGate parity_to_dense(const ParityGate& g);

/// Lattice table of a named diagonal gate: Z -> [0,8], CZ -> [0,0,0,8],
/// P -> [1,15]. Throws for H, which has no diagonal form.
DenseGate named_to_dense(const NamedGate& g);

const char* named_kind_name(NamedKind k);

}  // namespace iqpc

#endif
