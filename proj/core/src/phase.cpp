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

#include "iqpc/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iqpc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_radians(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod can land exactly on 2*pi after the correction
  if (r >= kTwoPi) r = 0;
  return r;
}

}  // namespace

PhaseValue PhaseValue::lattice(std::int64_t t) {
  PhaseValue p;
  p.is_lattice_ = true;
  p.units_ = static_cast<int>(((t % 16) + 16) % 16);
  p.theta_ = 0;
  return p;
}

PhaseValue PhaseValue::radians(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("phase angle must be finite");
  }
  PhaseValue p;
  p.is_lattice_ = false;
  p.units_ = 0;
  p.theta_ = reduce_radians(theta);
  return p;
}

int PhaseValue::lattice_units() const {
  if (!is_lattice_) {
    throw std::logic_error("lattice_units() on a Real phase");
  }
  return units_;
}

double PhaseValue::to_radians() const {
  return is_lattice_ ? units_ * (std::numbers::pi / 8.0) : theta_;
}

std::complex<double> PhaseValue::to_complex() const {
  if (is_lattice_) return lattice_phase_table()[units_];
  return std::polar(1.0, theta_);
}

PhaseValue PhaseValue::negated() const {
  if (is_lattice_) return lattice(16 - units_);
  return radians(kTwoPi - theta_);
}

PhaseValue phase_add(PhaseValue a, PhaseValue b) {
  if (a.is_lattice() && b.is_lattice()) {
    return PhaseValue::lattice(a.lattice_units() + b.lattice_units());
  }
  return PhaseValue::radians(a.to_radians() + b.to_radians());
}

const std::array<std::complex<double>, 16>& lattice_phase_table() {
  static const std::array<std::complex<double>, 16> table = [] {
    std::array<std::complex<double>, 16> t;
    for (int i = 0; i < 16; i++) {
      t[i] = std::polar(1.0, i * (std::numbers::pi / 8.0));
    }
    // Pin the axis entries so that lattice arithmetic is exact there.
    t[0] = {1, 0};
    t[4] = {0, 1};
    t[8] = {-1, 0};
    t[12] = {0, -1};
    return t;
  }();
  return table;
}

}  // namespace iqpc
