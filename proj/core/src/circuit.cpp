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

#include "iqpc/circuit.hpp"

#include <algorithm>
#include <set>

namespace iqpc {

const char* circuit_kind_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::universal:
      return "universal";
    case CircuitKind::iqp_x:
      return "iqp-x";
    case CircuitKind::iqp_z:
      return "iqp-z";
  }
  return "?";
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NoLines:
      return "NoLines";
    case ViolationKind::KindGateMismatch:
      return "KindGateMismatch";
    case ViolationKind::LineOutOfRange:
      return "LineOutOfRange";
    case ViolationKind::DuplicateLine:
      return "DuplicateLine";
    case ViolationKind::ArityCap:
      return "ArityCap";
    case ViolationKind::TableLength:
      return "TableLength";
    case ViolationKind::EmptyParity:
      return "EmptyParity";
    case ViolationKind::NamedArity:
      return "NamedArity";
    case ViolationKind::EmptyOutput:
      return "EmptyOutput";
    case ViolationKind::DuplicateRegisterLine:
      return "DuplicateRegisterLine";
    case ViolationKind::RegisterOverlap:
      return "RegisterOverlap";
    case ViolationKind::BadRelabel:
      return "BadRelabel";
  }
  return "?";
}

namespace {

bool all_distinct(const std::vector<std::uint32_t>& v) {
  std::set<std::uint32_t> seen(v.begin(), v.end());
  return seen.size() == v.size();
}

bool all_in_range(const std::vector<std::uint32_t>& v, std::uint32_t n) {
  return std::all_of(v.begin(), v.end(), [n](std::uint32_t x) { return x < n; });
}

void check_gate(const Circuit& c, std::size_t idx, std::size_t arity_cap,
                std::vector<Violation>& out) {
  const Gate& g = c.gates[idx];
  const auto lines = gate_lines(g);

  const bool named = std::holds_alternative<NamedGate>(g);
  if (c.kind == CircuitKind::universal && !named) {
    out.push_back({ViolationKind::KindGateMismatch,
                   "gate not permitted by kind: universal circuits take only named gates", idx});
  }
  if (c.kind != CircuitKind::universal && named) {
    out.push_back({ViolationKind::KindGateMismatch,
                   "gate not permitted by kind: iqp circuits take only diagonal gates", idx});
  }

  std::set<std::uint32_t> distinct(lines.begin(), lines.end());
  if (distinct.size() != lines.size()) {
    out.push_back({ViolationKind::DuplicateLine, "gate lines must be distinct", idx});
  }
  for (std::uint32_t l : lines) {
    if (l >= c.n_lines) {
      out.push_back({ViolationKind::LineOutOfRange,
                     "gate touches line " + std::to_string(l) + " but circuit has " +
                         std::to_string(c.n_lines) + " lines",
                     idx});
      break;
    }
  }

  if (const auto* d = std::get_if<DenseGate>(&g)) {
    if (d->lines.size() > arity_cap) {
      out.push_back({ViolationKind::ArityCap,
                     "dense gate arity " + std::to_string(d->lines.size()) + " exceeds cap " +
                         std::to_string(arity_cap),
                     idx});
    } else if (d->table.size() != (std::size_t{1} << d->lines.size())) {
      out.push_back({ViolationKind::TableLength,
                     "dense table has " + std::to_string(d->table.size()) + " entries, expected " +
                         std::to_string(std::size_t{1} << d->lines.size()),
                     idx});
    }
  } else if (const auto* p = std::get_if<ParityGate>(&g)) {
    if (p->lines.empty()) {
      out.push_back({ViolationKind::EmptyParity, "parity gate needs at least one line", idx});
    }
  } else if (const auto* n = std::get_if<NamedGate>(&g)) {
    const std::size_t want = n->kind == NamedKind::CZ ? 2 : 1;
    if (n->lines.size() != want) {
      out.push_back({ViolationKind::NamedArity,
                     std::string(named_kind_name(n->kind)) + " takes " + std::to_string(want) +
                         " line(s)",
                     idx});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Circuit& c, std::size_t dense_arity_cap) {
  std::vector<Violation> out;

  if (c.n_lines == 0) {
    out.push_back({ViolationKind::NoLines, "circuit needs at least one line"});
  }

  for (std::size_t i = 0; i < c.gates.size(); i++) {
    check_gate(c, i, dense_arity_cap, out);
  }

  if (c.output.empty()) {
    out.push_back({ViolationKind::EmptyOutput, "output register is empty"});
  }
  if (!all_distinct(c.output) || !all_distinct(c.postselect)) {
    out.push_back({ViolationKind::DuplicateRegisterLine, "register lines must be distinct"});
  }
  if (!all_in_range(c.output, c.n_lines) || !all_in_range(c.postselect, c.n_lines)) {
    out.push_back({ViolationKind::LineOutOfRange, "register line out of range"});
  }
  for (std::uint32_t o : c.output) {
    if (std::find(c.postselect.begin(), c.postselect.end(), o) != c.postselect.end()) {
      out.push_back({ViolationKind::RegisterOverlap,
                     "line " + std::to_string(o) + " is in both output and postselect registers"});
      break;
    }
  }

  if (!c.relabel.empty()) {
    bool ok = c.relabel.size() == c.n_lines && all_in_range(c.relabel, c.n_lines) &&
              all_distinct(c.relabel);
    if (!ok) {
      out.push_back({ViolationKind::BadRelabel, "relabel is not a permutation of the lines"});
    }
  }

  return out;
}

}  // namespace iqpc
