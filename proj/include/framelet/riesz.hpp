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

#include "framelet/laurent.hpp"

namespace framelet {

/// Absolute tolerance (relative to max|D|) of the nonnegativity witness.
inline constexpr double kPosTol = 1e-10;

/// D(w) = 1 - sum_j |a0(xi + 2 pi j / d)|^2 written in w = z^d.
/// Throws PreconditionError when the twisted sum leaves exponents that are
/// not multiples of d, i.e. when a0 is not a valid low-pass symbol.
LaurentPoly uep_deficit(const LaurentPoly& a0, int d);

/// min over `samples` equispaced xi of Re D(e^{-i xi}).
double min_on_circle(const LaurentPoly& D, int samples = 4096);

/// Spectral factor b with b b^* = D. The result is supported on [0, deg],
/// its lowest coefficient is real and positive, and it has real
/// coefficients whenever D does. Throws PreconditionError when D is not
/// Hermitian or not nonnegative and NumericalBreakdown when factorization
/// fails to reproduce D to 1e-8.
LaurentPoly riesz_factor(const LaurentPoly& D);

/// sqrt(c_{2n,2n-1}) ((2 - z - 1/z) / (4 d^2))^(n-1) (1 - z) / (2d), the
/// spectral factor of the deficit when m = 2n.
LaurentPoly closed_form_b0(int d, int n);

}  // namespace framelet
