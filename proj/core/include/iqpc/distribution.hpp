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

#ifndef IQPC_DISTRIBUTION_HPP
#define IQPC_DISTRIBUTION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iqpc {

/// A probability map over fixed-width bit strings. Outcomes are stored as
/// little-endian integers (bit i = the i-th register line); absent keys mean
/// probability zero. Simulator-produced distributions are normalized; the
/// struct itself does not enforce it, so it also serves as a plain keyed
/// value map (e.g. for the post-selected statistic).
struct Distribution {
  int width = 0;  // bits per outcome
  std::map<std::uint64_t, double> probs;

  double prob(std::uint64_t outcome) const {
    auto it = probs.find(outcome);
    return it == probs.end() ? 0.0 : it->second;
  }

  double total() const;

  bool operator==(const Distribution&) const = default;
};

/// Sums a distribution onto the given outcome bit positions; result bit j is
/// input bit positions[j]. Positions must be distinct and in range.
Distribution marginal(const Distribution& d, std::span<const int> positions);

/// Outcome tallies from a seeded sampling run. Counts sum to `shots`.
struct SampleBatch {
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  int width = 0;
  std::map<std::uint64_t, std::uint64_t> tallies;

  bool operator==(const SampleBatch&) const = default;
};

/// Bit-string rendering of an outcome, line-0 bit leftmost ("10" = first
/// register line reads 1, second reads 0).
std::string outcome_to_string(std::uint64_t outcome, int width);

/// Inverse of outcome_to_string. Throws std::invalid_argument on non-binary
/// characters or strings longer than 64 bits.
std::uint64_t outcome_from_string(std::string_view bits);

}  // namespace iqpc

#endif
