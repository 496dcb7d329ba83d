// Copyright 2026 The translit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSLIT_WEIGHT_H_
#define TRANSLIT_WEIGHT_H_

#include <cmath>
#include <algorithm>
#include <compare>
#include <limits>

namespace translit {

// Tropical (min, +) weight holding a cost = -ln(probability).
// Arc and final weights are finite and non-negative; Zero() (infinite cost)
// only marks "no path" / "not final".
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(double cost) : cost_(cost) {}

  static constexpr Weight One() { return Weight(0.0); }
  static constexpr Weight Zero() {
    return Weight(std::numeric_limits<double>::infinity());
  }
  // Throws std::invalid_argument unless 0 < p <= 1 (rounding slack 1e-9).
  static Weight FromProbability(double p);

  constexpr double Cost() const { return cost_; }
  double Probability() const { return std::exp(-cost_); }
  bool IsZero() const { return std::isinf(cost_); }
  // Finite and >= 0.
  bool IsValidArcWeight() const { return std::isfinite(cost_) && cost_ >= 0.0; }

  friend constexpr Weight Times(Weight a, Weight b) {
    return Weight(a.cost_ + b.cost_);
  }
  friend constexpr Weight Plus(Weight a, Weight b) {
    return a.cost_ <= b.cost_ ? a : b;
  }
  friend constexpr bool operator==(Weight a, Weight b) = default;
  friend constexpr auto operator<=>(Weight a, Weight b) {
    return a.cost_ <=> b.cost_;
  }

 private:
  double cost_ = 0.0;
};

// Relative closeness used for tie detection and tests.
inline bool ApproxEqual(double a, double b, double rel = 1e-9) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace translit

#endif  // TRANSLIT_WEIGHT_H_
