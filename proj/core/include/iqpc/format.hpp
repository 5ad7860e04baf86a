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

#ifndef IQPC_FORMAT_HPP
#define IQPC_FORMAT_HPP

#include <string>
#include <string_view>

#include "iqpc/circuit.hpp"
#include "iqpc/distribution.hpp"

namespace iqpc {

// Circuit text format (UTF-8, line oriented, '#' starts a comment):
//
//   qubits <n>
//   kind universal|iqp-x|iqp-z
//   output <i...>
//   postselect <i...>            (optional; conditioned outcome is all-zeros)
//   relabel <p0> <p1> ...        (optional; compiler provenance permutation)
//   gate H|Z|CZ|P <line(s)>      (universal circuits only)
//   gate D <k> <line...> L:<t0,...,t_{2^k-1}>     lattice phase table
//   gate D <k> <line...> R:<theta0,...>           radian phase table
//   gate X <k> <line...> L:<t> | R:<theta>        parity-phase gate
//
// serialize_circuit emits the canonical form: directives in the order above,
// comments stripped, lattice angles reduced mod 16, real angles printed with
// 17 significant digits so that parse(serialize(c)) == c exactly.

/// Throws ParseError with a 1-based line number for syntax errors, or with
/// line 0 and a diagnostic for semantic violations (wrong gate for kind,
/// overlapping registers, out-of-range lines, ...).
Circuit parse_circuit(std::string_view text);

std::string serialize_circuit(const Circuit& c);

// Distribution document: optional comments, then `width <m>`, then one
// `<bits> <value>` line per outcome with nonzero probability, bit strings
// printed line-0 leftmost and rows sorted by outcome key.

Distribution parse_distribution(std::string_view text);
std::string serialize_distribution(const Distribution& d);

// Sample document: `seed`, `shots`, `width` headers followed by
// `<bits> <count>` tally rows.

SampleBatch parse_samples(std::string_view text);
std::string serialize_samples(const SampleBatch& b);

/// Reads an entire file; throws Error when the file cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace iqpc

#endif
