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

#include "iqpc/distribution.hpp"

#include <set>
#include <stdexcept>

namespace iqpc {

double Distribution::total() const {
  double sum = 0;
  for (const auto& [_, p] : probs) sum += p;
  return sum;
}

Distribution marginal(const Distribution& d, std::span<const int> positions) {
  std::set<int> seen;
  for (int p : positions) {
    if (p < 0 || p >= d.width) throw std::invalid_argument("marginal: position out of range");
    if (!seen.insert(p).second) throw std::invalid_argument("marginal: duplicate position");
  }
  Distribution out;
  out.width = static_cast<int>(positions.size());
  for (const auto& [outcome, p] : d.probs) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < positions.size(); j++) {
      key |= ((outcome >> positions[j]) & 1u) << j;
    }
    out.probs[key] += p;
  }
  return out;
}

std::string outcome_to_string(std::uint64_t outcome, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; i++) {
    if ((outcome >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t outcome_from_string(std::string_view bits) {
  if (bits.size() > 64) throw std::invalid_argument("outcome wider than 64 bits");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      out |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("outcome must be a 0/1 string");
    }
  }
  return out;
}

}  // namespace iqpc
