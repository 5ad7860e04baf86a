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

#ifndef IQPC_ERRORS_HPP
#define IQPC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iqpc {

/// Base class for errors the toolkit raises on bad inputs or exceeded
/// resource limits (as opposed to std::invalid_argument for API misuse).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit or distribution document failed to parse. `line` is the
/// 1-based source line for syntax errors and 0 for semantic ones.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A configured resource cap (statevector qubits, sampler output bits,
/// enumeration width) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Post-selection conditioning is undefined: prob[P = 0...0] is zero up to
/// the hard threshold below.
class ZeroPostselectionMass : public Error {
 public:
  using Error::Error;
};

/// Threshold distinguishing a truly impossible post-selection event from
/// floating-point residue.
inline constexpr double kZeroPostselectionThreshold = 1e-14;

}  // namespace iqpc

#endif
