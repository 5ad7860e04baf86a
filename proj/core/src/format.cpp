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

#include "iqpc/format.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "iqpc/errors.hpp"

namespace iqpc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) i++;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') j++;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

std::uint32_t parse_u32(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = parse_int(tok, line, what);
  if (v < 0 || v > 0xffffffffLL) {
    throw ParseError(line, std::string(what) + " out of range: " + std::string(tok));
  }
  return static_cast<std::uint32_t>(v);
}

double parse_double(std::string_view tok, std::size_t line, const char* what) {
  std::string buf(tok);
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + buf + "'");
  }
  return v;
}

std::vector<std::uint32_t> parse_line_list(const std::vector<std::string_view>& toks,
                                           std::size_t from, std::size_t count, std::size_t line) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; i++) {
    out.push_back(parse_u32(toks[from + i], line, "line index"));
  }
  return out;
}

// `L:1,15` or `R:0.3,...` -> list of phases; lattice values may be any
// integers and are reduced mod 16.
std::vector<PhaseValue> parse_phase_list(std::string_view tok, std::size_t expect,
                                         std::size_t line) {
  bool lattice;
  if (tok.starts_with("L:")) {
    lattice = true;
  } else if (tok.starts_with("R:")) {
    lattice = false;
  } else {
    throw ParseError(line, "expected phase list 'L:...' or 'R:...', got '" + std::string(tok) + "'");
  }
  auto parts = split_commas(tok.substr(2));
  if (parts.size() != expect) {
    throw ParseError(line, "phase list has " + std::to_string(parts.size()) + " entries, expected " +
                               std::to_string(expect));
  }
  std::vector<PhaseValue> out;
  out.reserve(parts.size());
  for (auto p : parts) {
    if (lattice) {
      out.push_back(PhaseValue::lattice(parse_int(p, line, "lattice phase")));
    } else {
      out.push_back(PhaseValue::radians(parse_double(p, line, "radian phase")));
    }
  }
  return out;
}

Gate parse_gate(const std::vector<std::string_view>& toks, std::size_t line) {
  // toks[0] == "gate"
  if (toks.size() < 3) throw ParseError(line, "truncated gate directive");
  const std::string_view op = toks[1];

  if (op == "H" || op == "Z" || op == "CZ" || op == "P") {
    NamedGate g;
    g.kind = op == "H"   ? NamedKind::H
             : op == "Z" ? NamedKind::Z
             : op == "CZ" ? NamedKind::CZ
                          : NamedKind::P;
    g.lines = parse_line_list(toks, 2, toks.size() - 2, line);
    return g;
  }

  if (op == "D" || op == "X") {
    const std::size_t k = static_cast<std::size_t>(parse_u32(toks[2], line, "gate arity"));
    if (toks.size() != 3 + k + 1) {
      throw ParseError(line, "gate directive needs " + std::to_string(k) +
                                 " line indices and one phase list");
    }
    auto lines = parse_line_list(toks, 3, k, line);
    if (op == "D") {
      if (k >= 32) throw ParseError(line, "dense gate arity is unreasonably large");
      DenseGate g;
      g.lines = std::move(lines);
      g.table = parse_phase_list(toks.back(), std::size_t{1} << k, line);
      return g;
    }
    ParityGate g;
    g.lines = std::move(lines);
    g.theta = parse_phase_list(toks.back(), 1, line)[0];
    return g;
  }

  throw ParseError(line, "unknown gate '" + std::string(op) + "'");
}

std::string_view strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void format_phase(std::string& out, const PhaseValue& p) {
  if (p.is_lattice()) {
    out += std::to_string(p.lattice_units());
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p.to_radians());
    out += buf;
  }
}

void format_phase_list(std::string& out, const std::vector<PhaseValue>& phases) {
  bool lattice = true;
  for (const auto& p : phases) lattice &= p.is_lattice();
  out += lattice ? "L:" : "R:";
  for (std::size_t i = 0; i < phases.size(); i++) {
    if (i) out += ',';
    if (lattice) {
      out += std::to_string(phases[i].lattice_units());
    } else {
      format_phase(out, phases[i]);
    }
  }
}

bool is_identity_permutation(const std::vector<std::uint32_t>& v) {
  for (std::size_t i = 0; i < v.size(); i++) {
    if (v[i] != i) return false;
  }
  return true;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool saw_qubits = false, saw_kind = false, saw_output = false, saw_postselect = false,
       saw_relabel = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    line_no++;
    auto toks = split_ws(strip_comment(text.substr(pos, eol - pos)));
    pos = eol + 1;
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const std::string_view head = toks[0];
    if (head == "qubits") {
      if (saw_qubits) throw ParseError(line_no, "duplicate 'qubits' directive");
      if (toks.size() != 2) throw ParseError(line_no, "usage: qubits <n>");
      c.n_lines = parse_u32(toks[1], line_no, "line count");
      saw_qubits = true;
    } else if (head == "kind") {
      if (saw_kind) throw ParseError(line_no, "duplicate 'kind' directive");
      if (toks.size() != 2) throw ParseError(line_no, "usage: kind universal|iqp-x|iqp-z");
      if (toks[1] == "universal") {
        c.kind = CircuitKind::universal;
      } else if (toks[1] == "iqp-x") {
        c.kind = CircuitKind::iqp_x;
      } else if (toks[1] == "iqp-z") {
        c.kind = CircuitKind::iqp_z;
      } else {
        throw ParseError(line_no, "unknown kind '" + std::string(toks[1]) + "'");
      }
      saw_kind = true;
    } else if (head == "output") {
      if (saw_output) throw ParseError(line_no, "duplicate 'output' directive");
      if (toks.size() < 2) throw ParseError(line_no, "output register needs at least one line");
      c.output = parse_line_list(toks, 1, toks.size() - 1, line_no);
      saw_output = true;
    } else if (head == "postselect") {
      if (saw_postselect) throw ParseError(line_no, "duplicate 'postselect' directive");
      if (toks.size() < 2) throw ParseError(line_no, "postselect directive needs at least one line");
      c.postselect = parse_line_list(toks, 1, toks.size() - 1, line_no);
      saw_postselect = true;
    } else if (head == "relabel") {
      if (saw_relabel) throw ParseError(line_no, "duplicate 'relabel' directive");
      c.relabel = parse_line_list(toks, 1, toks.size() - 1, line_no);
      saw_relabel = true;
    } else if (head == "gate") {
      c.gates.push_back(parse_gate(toks, line_no));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(head) + "'");
    }
    if (eol == text.size()) break;
  }

  if (!saw_qubits) throw ParseError(0, "missing 'qubits' directive");
  if (!saw_kind) throw ParseError(0, "missing 'kind' directive");
  if (!saw_output) throw ParseError(0, "missing 'output' directive");

  if (is_identity_permutation(c.relabel)) c.relabel.clear();

  auto violations = validate(c);
  if (!violations.empty()) {
    std::string msg = "invalid circuit:";
    for (const auto& v : violations) {
      msg += "\n  [";
      msg += violation_kind_name(v.kind);
      msg += "] ";
      msg += v.detail;
      if (v.gate_index != static_cast<std::size_t>(-1)) {
        msg += " (gate " + std::to_string(v.gate_index) + ")";
      }
    }
    throw ParseError(0, msg);
  }
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::string out;
  out += "qubits " + std::to_string(c.n_lines) + "\n";
  out += std::string("kind ") + circuit_kind_name(c.kind) + "\n";
  if (!c.relabel.empty() && !is_identity_permutation(c.relabel)) {
    out += "relabel";
    for (auto p : c.relabel) out += " " + std::to_string(p);
    out += "\n";
  }
  out += "output";
  for (auto o : c.output) out += " " + std::to_string(o);
  out += "\n";
  if (!c.postselect.empty()) {
    out += "postselect";
    for (auto p : c.postselect) out += " " + std::to_string(p);
    out += "\n";
  }
  for (const Gate& g : c.gates) {
    out += "gate ";
    if (const auto* n = std::get_if<NamedGate>(&g)) {
      out += named_kind_name(n->kind);
      for (auto l : n->lines) out += " " + std::to_string(l);
    } else if (const auto* d = std::get_if<DenseGate>(&g)) {
      out += "D " + std::to_string(d->lines.size());
      for (auto l : d->lines) out += " " + std::to_string(l);
      out += " ";
      format_phase_list(out, d->table);
    } else if (const auto* p = std::get_if<ParityGate>(&g)) {
      out += "X " + std::to_string(p->lines.size());
      for (auto l : p->lines) out += " " + std::to_string(l);
      out += " ";
      std::vector<PhaseValue> one{p->theta};
      format_phase_list(out, one);
    }
    out += "\n";
  }
  return out;
}

namespace {

// Shared scaffolding for the two key/value documents.
struct KvDoc {
  std::map<std::string, std::string> headers;
  std::vector<std::pair<std::string, std::string>> rows;  // (bits, value)
};

KvDoc parse_kv_doc(std::string_view text, const std::vector<std::string>& header_names) {
  KvDoc doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    line_no++;
    auto toks = split_ws(strip_comment(text.substr(pos, eol - pos)));
    pos = eol + 1;
    if (!toks.empty()) {
      if (toks.size() != 2) throw ParseError(line_no, "expected '<key> <value>'");
      std::string key(toks[0]);
      bool is_header = false;
      for (const auto& h : header_names) is_header |= (h == key);
      if (is_header) {
        if (doc.headers.count(key)) throw ParseError(line_no, "duplicate '" + key + "' header");
        doc.headers[key] = std::string(toks[1]);
      } else {
        doc.rows.emplace_back(key, std::string(toks[1]));
      }
    }
    if (eol == text.size()) break;
  }
  for (const auto& h : header_names) {
    if (!doc.headers.count(h)) throw ParseError(0, "missing '" + h + "' header");
  }
  return doc;
}

int parse_width_header(const KvDoc& doc) {
  std::int64_t w = parse_int(doc.headers.at("width"), 0, "width");
  if (w < 0 || w > 63) throw ParseError(0, "width must be in 0..63");
  return static_cast<int>(w);
}

std::uint64_t parse_outcome_row(const std::string& bits, int width) {
  if (static_cast<int>(bits.size()) != width) {
    throw ParseError(0, "outcome '" + bits + "' does not match width " + std::to_string(width));
  }
  return outcome_from_string(bits);
}

}  // namespace

Distribution parse_distribution(std::string_view text) {
  KvDoc doc = parse_kv_doc(text, {"width"});
  Distribution d;
  d.width = parse_width_header(doc);
  for (const auto& [bits, value] : doc.rows) {
    std::uint64_t key = parse_outcome_row(bits, d.width);
    if (d.probs.count(key)) throw ParseError(0, "duplicate outcome '" + bits + "'");
    double p = parse_double(value, 0, "probability");
    if (p < 0 || p > 1 + 1e-12) throw ParseError(0, "probability out of [0,1]: " + value);
    d.probs[key] = p;
  }
  if (std::abs(d.total() - 1.0) > 1e-9) {
    throw ParseError(0, "probabilities sum to " + std::to_string(d.total()) + ", expected 1");
  }
  return d;
}

std::string serialize_distribution(const Distribution& d) {
  std::string out = "width " + std::to_string(d.width) + "\n";
  char buf[40];
  for (const auto& [outcome, p] : d.probs) {
    std::snprintf(buf, sizeof buf, "%.17g", p);
    out += outcome_to_string(outcome, d.width) + " " + buf + "\n";
  }
  return out;
}

SampleBatch parse_samples(std::string_view text) {
  KvDoc doc = parse_kv_doc(text, {"seed", "shots", "width"});
  SampleBatch b;
  b.seed = static_cast<std::uint64_t>(
      std::strtoull(doc.headers.at("seed").c_str(), nullptr, 10));
  b.shots = static_cast<std::uint64_t>(
      std::strtoull(doc.headers.at("shots").c_str(), nullptr, 10));
  b.width = parse_width_header(doc);
  std::uint64_t sum = 0;
  for (const auto& [bits, value] : doc.rows) {
    std::uint64_t key = parse_outcome_row(bits, b.width);
    if (b.tallies.count(key)) throw ParseError(0, "duplicate outcome '" + bits + "'");
    std::int64_t n = parse_int(value, 0, "count");
    if (n < 0) throw ParseError(0, "negative count");
    b.tallies[key] = static_cast<std::uint64_t>(n);
    sum += static_cast<std::uint64_t>(n);
  }
  if (sum != b.shots) {
    throw ParseError(0, "tallies sum to " + std::to_string(sum) + ", expected shots = " +
                            std::to_string(b.shots));
  }
  return b;
}

std::string serialize_samples(const SampleBatch& b) {
  std::string out;
  out += "seed " + std::to_string(b.seed) + "\n";
  out += "shots " + std::to_string(b.shots) + "\n";
  out += "width " + std::to_string(b.width) + "\n";
  for (const auto& [outcome, count] : b.tallies) {
    out += outcome_to_string(outcome, b.width) + " " + std::to_string(count) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace iqpc
