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

#ifndef IQPC_COMPILER_HPP
#define IQPC_COMPILER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iqpc/circuit.hpp"

namespace iqpc {

/// What the gadget lowering did to a circuit's lines.
struct GadgetReport {
  std::size_t ancillas_added = 0;
  std::size_t postselects_added = 0;

  /// relabel[role] = physical line playing that role; roles 0..n-1 are the
  /// original wires, roles n.. are the gadget post-selection slots in
  /// application order. Identity (and empty) when nothing moved.
  std::vector<std::uint32_t> relabel;

  /// Original output/postselect lines -> the final physical lines that now
  /// carry their measurement.
  std::map<std::uint32_t, std::uint32_t> original_to_final;

  /// One entry per gadget: (fresh ancilla line, terminated line).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gadgets;
};

/// X-diagonal and Z-diagonal forms carry identical gate tables; conjugating
/// by Hadamard on every line only swaps which basis the tables are read in,
/// so the conversion just flips the kind tag. The implemented unitary
/// (including the implicit iqp-z sandwich) is unchanged.
/// Throws std::invalid_argument on the wrong input kind.
Circuit to_z_form(const Circuit& c);
Circuit to_x_form(const Circuit& c);

/// Inserts H.H pairs so that every line's first and last gate is an H,
/// preserving the implemented unitary exactly (H.H = I). Lines with no gates
/// get a single pair; a line whose sole gate is an H gets a trailing pair so
/// that the leading and trailing H are distinct gates.
Circuit normalize_hadamards(const Circuit& c);

/// Lowers a universal {H, Z, CZ, P} circuit to a post-selected iqp-z
/// circuit. Every intermediate Hadamard on a line a is replaced by a CZ onto
/// a fresh ancilla e whose implicit leading H opens it; line a terminates
/// into the postselect register (its implicit trailing H closing the
/// gadget), and later gates on a's wire are routed to e. Conditional output
/// probabilities are preserved exactly; each gadget succeeds with
/// probability 1/2 regardless of the state passing through it.
std::pair<Circuit, GadgetReport> gadgetize(const Circuit& c);

/// True iff every diagonal phase in the circuit lies on the pi/8 lattice.
bool check_restricted_phases(const Circuit& c);

/// Comment block (`# ancilla e<-a` lines) for writing next to a compiled
/// circuit; the relabel permutation itself is carried by the circuit's
/// `relabel` directive.
std::string gadget_report_comments(const GadgetReport& r);

}  // namespace iqpc

#endif
