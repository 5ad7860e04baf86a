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

#include "iqpc/gate.hpp"

#include <bit>
#include <stdexcept>

namespace iqpc {

std::span<const std::uint32_t> gate_lines(const Gate& g) {
  return std::visit([](const auto& gate) { return std::span<const std::uint32_t>(gate.lines); }, g);
}

std::size_t gate_arity(const Gate& g) {
  return gate_lines(g).size();
}

PhaseValue gate_phase(const Gate& g, std::uint64_t bits) {
  const std::size_t k = gate_arity(g);
  if (k < 64 && (bits >> k) != 0) {
    throw std::invalid_argument("gate_phase: bit pattern wider than gate arity");
  }
  if (const auto* d = std::get_if<DenseGate>(&g)) {
    return d->table[bits];
  }
  if (const auto* p = std::get_if<ParityGate>(&g)) {
    return (std::popcount(bits) % 2 == 0) ? p->theta : p->theta.negated();
  }
  throw std::invalid_argument("gate_phase: named gates have no phase table here");
}

DenseGate parity_to_dense(const ParityGate& g) {
  DenseGate d;
  d.lines = g.lines;
  const std::size_t n = std::size_t{1} << g.lines.size();
  d.table.reserve(n);
  const PhaseValue neg = g.theta.negated();
  for (std::uint64_t b = 0; b < n; b++) {
    d.table.push_back(std::popcount(b) % 2 == 0 ? g.theta : neg);
  }
  return d;
}

DenseGate named_to_dense(const NamedGate& g) {
  DenseGate d;
  d.lines = g.lines;
  switch (g.kind) {
    case NamedKind::Z:
      d.table = {PhaseValue::lattice(0), PhaseValue::lattice(8)};
      return d;
    case NamedKind::CZ:
      d.table = {PhaseValue::lattice(0), PhaseValue::lattice(0), PhaseValue::lattice(0),
                 PhaseValue::lattice(8)};
      return d;
    case NamedKind::P:
      d.table = {PhaseValue::lattice(1), PhaseValue::lattice(15)};
      return d;
    case NamedKind::H:
      break;
  }
  throw std::invalid_argument("named_to_dense: H is not diagonal");
}

const char* named_kind_name(NamedKind k) {
  switch (k) {
    case NamedKind::H:
      return "H";
    case NamedKind::Z:
      return "Z";
    case NamedKind::CZ:
      return "CZ";
    case NamedKind::P:
      return "P";
  }
  return "?";
}

}  // namespace iqpc
