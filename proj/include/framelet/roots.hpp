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

#include <span>
#include <vector>

#include "framelet/laurent.hpp"

namespace framelet {

/// Roots of sum_k coeffs[k] y^k (index = degree). Leading zeros are ignored.
/// Computed as companion-matrix eigenvalues and polished with two Newton
/// steps on the original polynomial.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);
std::vector<Complex> polynomial_roots(std::span<const double> coeffs);

/// Horner evaluation of sum_k coeffs[k] y^k.
Complex horner(std::span<const Complex> coeffs, Complex y);
double horner(std::span<const double> coeffs, double y);

}  // namespace framelet
