/*
 * Copyright 2026 The framelet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <numeric>

namespace framelet {

/// Reduced fraction num/den with den > 0.
struct Rational {
  long num = 0;
  long den = 1;

  static Rational make(long num, long den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long g = std::gcd(num, den);
    return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

}  // namespace framelet
