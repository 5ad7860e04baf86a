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

#include "iqpc/compiler.hpp"

#include <optional>
#include <stdexcept>

namespace iqpc {

namespace {

void require_kind(const Circuit& c, CircuitKind want, const char* who) {
  if (c.kind != want) {
    throw std::invalid_argument(std::string(who) + ": expected a " + circuit_kind_name(want) +
                                " circuit, got " + circuit_kind_name(c.kind));
  }
}

bool is_h_gate(const Gate& g) {
  const auto* n = std::get_if<NamedGate>(&g);
  return n && n->kind == NamedKind::H;
}

}  // namespace

Circuit to_z_form(const Circuit& c) {
  require_kind(c, CircuitKind::iqp_x, "to_z_form");
  Circuit out = c;
  out.kind = CircuitKind::iqp_z;
  return out;
}

Circuit to_x_form(const Circuit& c) {
  require_kind(c, CircuitKind::iqp_z, "to_x_form");
  Circuit out = c;
  out.kind = CircuitKind::iqp_x;
  return out;
}

Circuit normalize_hadamards(const Circuit& c) {
  require_kind(c, CircuitKind::universal, "normalize_hadamards");

  // Per line: the first/last gate touching it, and whether that gate is an H.
  struct LineInfo {
    std::optional<std::size_t> first, last;
  };
  std::vector<LineInfo> info(c.n_lines);
  for (std::size_t i = 0; i < c.gates.size(); i++) {
    for (auto l : gate_lines(c.gates[i])) {
      if (!info[l].first) info[l].first = i;
      info[l].last = i;
    }
  }

  std::vector<Gate> prefix, suffix;
  auto h_pair = [](std::uint32_t line) {
    return std::vector<Gate>{NamedGate{NamedKind::H, {line}}, NamedGate{NamedKind::H, {line}}};
  };
  for (std::uint32_t l = 0; l < c.n_lines; l++) {
    const auto& li = info[l];
    if (!li.first) {
      // untouched line: one pair serves as both boundary H's
      auto pair = h_pair(l);
      suffix.insert(suffix.end(), pair.begin(), pair.end());
      continue;
    }
    const bool first_is_h = is_h_gate(c.gates[*li.first]);
    const bool last_is_h = is_h_gate(c.gates[*li.last]);
    if (!first_is_h) {
      auto pair = h_pair(l);
      prefix.insert(prefix.end(), pair.begin(), pair.end());
    }
    // A single H gate would have to serve as both boundaries; add a trailing
    // pair so the walk sees distinct leading and trailing H's.
    if (!last_is_h || (first_is_h && *li.first == *li.last)) {
      auto pair = h_pair(l);
      suffix.insert(suffix.end(), pair.begin(), pair.end());
    }
  }

  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(prefix.size() + c.gates.size() + suffix.size());
  out.gates.insert(out.gates.end(), prefix.begin(), prefix.end());
  out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
  out.gates.insert(out.gates.end(), suffix.begin(), suffix.end());
  return out;
}

std::pair<Circuit, GadgetReport> gadgetize(const Circuit& c) {
  require_kind(c, CircuitKind::universal, "gadgetize");
  Circuit norm = normalize_hadamards(c);

  // After normalization the last gate touching any wire is its trailing H.
  std::vector<std::size_t> last_touch(norm.n_lines, 0);
  for (std::size_t i = 0; i < norm.gates.size(); i++) {
    for (auto l : gate_lines(norm.gates[i])) last_touch[l] = i;
  }

  enum class WireState { awaiting_first_h, active, finished };
  std::vector<WireState> state(norm.n_lines, WireState::awaiting_first_h);
  std::vector<std::uint32_t> carrier(norm.n_lines);  // wire -> physical line
  for (std::uint32_t w = 0; w < norm.n_lines; w++) carrier[w] = w;

  Circuit out;
  out.kind = CircuitKind::iqp_z;
  GadgetReport report;
  std::uint32_t next_line = norm.n_lines;
  std::vector<std::uint32_t> gadget_postselects;

  auto require_active = [&](std::uint32_t wire) {
    if (state[wire] != WireState::active) {
      throw std::logic_error("gadgetize: line " + std::to_string(wire) +
                             " used outside its active window");
    }
  };

  for (std::size_t i = 0; i < norm.gates.size(); i++) {
    const auto* n = std::get_if<NamedGate>(&norm.gates[i]);
    if (!n) throw std::invalid_argument("gadgetize: gate outside the universal set");

    if (n->kind == NamedKind::H) {
      const std::uint32_t wire = n->lines[0];
      if (state[wire] == WireState::awaiting_first_h) {
        // leading boundary H, realized by the implicit sandwich
        state[wire] = WireState::active;
      } else if (i == last_touch[wire]) {
        // trailing boundary H, also implicit; the carrier is measured as-is
        require_active(wire);
        state[wire] = WireState::finished;
      } else {
        // interior H: CZ onto a fresh ancilla, terminate the old carrier
        // into the postselect register, reroute the wire
        require_active(wire);
        const std::uint32_t a = carrier[wire];
        const std::uint32_t e = next_line++;
        out.gates.push_back(DenseGate{{a, e},
                                      {PhaseValue::lattice(0), PhaseValue::lattice(0),
                                       PhaseValue::lattice(0), PhaseValue::lattice(8)}});
        gadget_postselects.push_back(a);
        report.gadgets.emplace_back(e, a);
        carrier[wire] = e;
      }
      continue;
    }

    // Z-diagonal member of the universal set; reroute onto current carriers.
    NamedGate moved = *n;
    for (auto& l : moved.lines) {
      require_active(l);
      l = carrier[l];
    }
    out.gates.push_back(named_to_dense(moved));
  }

  out.n_lines = next_line;
  for (auto o : c.output) {
    out.output.push_back(carrier[o]);
    report.original_to_final[o] = carrier[o];
  }
  for (auto p : c.postselect) {
    out.postselect.push_back(carrier[p]);
    report.original_to_final[p] = carrier[p];
  }
  out.postselect.insert(out.postselect.end(), gadget_postselects.begin(), gadget_postselects.end());

  report.ancillas_added = report.gadgets.size();
  report.postselects_added = report.gadgets.size();
  report.relabel.resize(out.n_lines);
  for (std::uint32_t w = 0; w < norm.n_lines; w++) report.relabel[w] = carrier[w];
  for (std::size_t j = 0; j < report.gadgets.size(); j++) {
    report.relabel[norm.n_lines + j] = report.gadgets[j].second;
  }

  bool identity = true;
  for (std::uint32_t i = 0; i < out.n_lines; i++) identity &= (report.relabel[i] == i);
  if (!identity) out.relabel = report.relabel;
  return {std::move(out), std::move(report)};
}

bool check_restricted_phases(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (const auto* d = std::get_if<DenseGate>(&g)) {
      for (const auto& p : d->table) {
        if (!p.is_lattice()) return false;
      }
    } else if (const auto* p = std::get_if<ParityGate>(&g)) {
      if (!p->theta.is_lattice()) return false;
    }
    // Named gates: Z, CZ, P expand to lattice tables; H carries no phase.
  }
  return true;
}

std::string gadget_report_comments(const GadgetReport& r) {
  std::string out;
  out += "# gadgetized: ancillas " + std::to_string(r.ancillas_added) + ", postselects " +
         std::to_string(r.postselects_added) + "\n";
  for (const auto& [e, a] : r.gadgets) {
    out += "# ancilla " + std::to_string(e) + "<-" + std::to_string(a) + "\n";
  }
  for (const auto& [orig, fin] : r.original_to_final) {
    if (orig != fin) {
      out += "# register " + std::to_string(orig) + "->" + std::to_string(fin) + "\n";
    }
  }
  return out;
}

}  // namespace iqpc
