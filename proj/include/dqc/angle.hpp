// Copyright 2026 The dqc-equiv Authors
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

#pragma once

#include <compare>
#include <numbers>
#include <ostream>

namespace dqc {

/// Element of the eight-angle measurement set: k * pi/4 with k in [0, 8).
///
/// All arithmetic is modulo 8, so negation, addition and the +pi shift
/// stay inside the set.
class AngleIndex {
 public:
  constexpr AngleIndex() = default;
  constexpr explicit AngleIndex(int k) : k_(((k % 8) + 8) % 8) {}

  static constexpr AngleIndex zero() { return AngleIndex(0); }
  static constexpr AngleIndex pi() { return AngleIndex(4); }
  static constexpr AngleIndex half_pi() { return AngleIndex(2); }

  constexpr int value() const { return k_; }
  constexpr double radians() const { return k_ * std::numbers::pi / 4.0; }

  constexpr AngleIndex operator-() const { return AngleIndex(-k_); }
  constexpr AngleIndex operator+(AngleIndex o) const { return AngleIndex(k_ + o.k_); }
  constexpr AngleIndex operator-(AngleIndex o) const { return AngleIndex(k_ - o.k_); }
  constexpr AngleIndex& operator+=(AngleIndex o) { return *this = *this + o; }
  constexpr AngleIndex& operator-=(AngleIndex o) { return *this = *this - o; }

  /// Adds pi when `bit` is 1.
  constexpr AngleIndex plus_pi_if(int bit) const { return AngleIndex(k_ + 4 * (bit & 1)); }
  /// Negates when `bit` is 1.
  constexpr AngleIndex negated_if(int bit) const { return (bit & 1) ? -*this : *this; }

  constexpr auto operator<=>(const AngleIndex&) const = default;

 private:
  int k_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, AngleIndex a) {
  return os << a.value() << "pi/4";
}

}  // namespace dqc
