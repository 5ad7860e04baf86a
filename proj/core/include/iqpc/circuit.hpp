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

#ifndef IQPC_CIRCUIT_HPP
#define IQPC_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iqpc/gate.hpp"

namespace iqpc {

/// Circuit flavor. `universal` permits only the named {H, Z, CZ, P} gates.
/// `iqp_x` holds gates diagonal in the X basis; `iqp_z` holds Z-diagonal
/// gates with an implicit Hadamard on every line at both ends (the sandwich
/// is never stored, so an iqp_z circuit cannot express an interior H).
enum class CircuitKind : std::uint8_t { universal, iqp_x, iqp_z };

const char* circuit_kind_name(CircuitKind k);

struct Circuit {
  CircuitKind kind = CircuitKind::universal;
  std::uint32_t n_lines = 0;
  std::vector<Gate> gates;

  /// Measured output register O, in order (bit i of an outcome = line
  /// output[i]).
  std::vector<std::uint32_t> output;

  /// Post-selection register P, disjoint from the output register. The
  /// conditioned outcome is always all-zeros.
  std::vector<std::uint32_t> postselect;

  /// Line provenance left behind by the compiler: relabel[role] is the
  /// physical line now playing original role `role` (original wires first,
  /// then gadget slots). Empty means identity.
  std::vector<std::uint32_t> relabel;

  bool operator==(const Circuit&) const = default;
};

enum class ViolationKind : std::uint8_t {
  NoLines,
  KindGateMismatch,
  LineOutOfRange,
  DuplicateLine,
  ArityCap,
  TableLength,
  EmptyParity,
  NamedArity,
  EmptyOutput,
  DuplicateRegisterLine,
  RegisterOverlap,
  BadRelabel,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;

  /// Index of the offending gate, or SIZE_MAX for circuit-level violations.
  std::size_t gate_index = static_cast<std::size_t>(-1);
};

/// Checks every structural invariant of the IR; an empty result means the
/// circuit is well formed. Violations are data, not exceptions.
std::vector<Violation> validate(const Circuit& c,
                                std::size_t dense_arity_cap = kDefaultDenseArityCap);

}  // namespace iqpc

#endif
