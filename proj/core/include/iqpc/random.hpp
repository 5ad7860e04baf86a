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

#ifndef IQPC_RANDOM_HPP
#define IQPC_RANDOM_HPP

#include <cstdint>

namespace iqpc {

/// SplitMix64 finalizer. Used both to derive independent per-shot streams
/// from one user seed and as the sampler's bit source, so that sampling is
/// bit-reproducible across platforms (std::uniform_real_distribution is
/// implementation-defined; this is not).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic stream for shot `index` of a run seeded with `seed`.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint64_t index) : state_(seed) {
    // decorrelate the per-shot streams
    state_ = splitmix64(state_) ^ (index * 0xd1342543de82ef95ULL);
    (void)splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace iqpc

#endif
