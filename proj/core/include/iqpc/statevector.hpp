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

#ifndef IQPC_STATEVECTOR_HPP
#define IQPC_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "iqpc/circuit.hpp"
#include "iqpc/distribution.hpp"
#include "iqpc/errors.hpp"

namespace iqpc {

/// Desk-scale ground truth: 2^22 complex doubles is ~64 MB.
inline constexpr std::uint32_t kDefaultQubitCap = 22;

/// Dense amplitude vector over n lines; amps[z] indexed little-endian
/// (bit i of z = line i).
struct StateVector {
  std::uint32_t n = 0;
  std::vector<std::complex<double>> amps;

  double norm_sq() const;
};

/// Exact final pre-measurement state of a circuit on |0...0>. For iqp-z the
/// implicit Hadamard sandwich is applied on every line; for iqp-x each gate
/// is expanded as H-conjugation on its own support.
/// Throws CapExceeded when n_lines > qubit_cap.
StateVector run_statevector(const Circuit& c, std::uint32_t qubit_cap = kDefaultQubitCap);

/// Born-rule distribution over the concatenated (output ++ postselect)
/// register, remaining lines traced out.
Distribution joint_distribution(const Circuit& c, std::uint32_t qubit_cap = kDefaultQubitCap);

/// Output distribution conditioned on the postselect register reading
/// all-zeros: prob[O = x | P = 0...0]. Equal to the plain output
/// distribution when the postselect register is empty.
/// Throws ZeroPostselectionMass when prob[P = 0...0] <= 1e-14.
Distribution conditional_distribution(const Circuit& c, std::uint32_t qubit_cap = kDefaultQubitCap);

/// Weak simulation from the strong one: each shot draws the output bits left
/// to right, each bit from its exact conditional distribution given the bits
/// already drawn (a quotient of two marginals). Deterministic per
/// (seed, shots).
SampleBatch sample_bitchain(const Circuit& c, std::uint64_t seed, std::uint64_t shots,
                            std::uint32_t qubit_cap = kDefaultQubitCap);

}  // namespace iqpc

#endif
