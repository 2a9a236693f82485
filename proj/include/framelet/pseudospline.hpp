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

#include <vector>

#include "framelet/laurent.hpp"

namespace framelet {

/// Real polynomial in y, index = degree.
using RealPoly = std::vector<double>;
/// Complex polynomial in y, index = degree.
using ComplexPoly = std::vector<Complex>;

inline constexpr int kMaxDilation = 8;
inline constexpr int kMaxSumRules = 12;

/// Parameters of a complex pseudo-spline low-pass filter.
struct PseudoSplineParams {
  int d = 2;  ///< dilation factor
  int m = 1;  ///< order of sum rules
  int n = 1;  ///< vanishing moments of the wavelets are 2n-1

  /// m(d-1) mod 2.
  int eps() const { return (m * (d - 1)) % 2; }
  /// floor(m(d-1)/2).
  int shift() const { return (m * (d - 1)) / 2; }

  /// Throws InvalidArgument unless 2 <= d <= 8, 1 <= m <= 12, n >= 1 and
  /// 2n-1 <= m.
  void validate() const;
};

/// Coefficient of y^j in the Taylor series of h(y)^(-m).
double c_coeff(int d, int m, int j);

/// P_{m,n}(y) = sum_{j<n} c_coeff(d, m, j) y^j.
RealPoly poly_P(int d, int m, int n);

/// h(y) = prod_{k=1}^{d-1} (1 - y / sin^2(k pi / d)).
RealPoly poly_h(int d);

/// Q_{m,n}(y) = prod (1 - y / z_j) over the roots z_j of P_{m,2n-1} with
/// positive imaginary part, so that |Q(y)|^2 = P_{m,2n-1}(y) on the real
/// line and Q(0) = 1. Throws PreconditionError if 2n-1 > m and
/// NumericalBreakdown when the roots cannot be paired.
ComplexPoly poly_Q(int d, int m, int n);

/// Laurent polynomial of sum_j q_j y^j under y = (2 - z - 1/z) / 4, which is
/// sin^2(xi/2) at z = e^{-i xi}.
LaurentPoly in_sin2(const ComplexPoly& q);
LaurentPoly in_sin2(const RealPoly& q);

struct Lowpass {
  LaurentPoly symbol;
  SymmetrySpec sym;  ///< Sym a_0 = z^eps
};

/// a_0(z) = z^(-F) ((1 + z + ... + z^(d-1)) / d)^m Q_{m,n}(y(z)) with
/// F = floor(m(d-1)/2).
Lowpass lowpass(const PseudoSplineParams& params);

/// Expected coefficient support of the low-pass symbol.
Support lowpass_support(const PseudoSplineParams& params);

struct IndependenceCertificate {
  double max_root_modulus = 0.0;  ///< over roots of sum_j 2^(-j) c_{m,j} z^j
  bool monotone = true;           ///< 2 c_{m,j-1} < c_{m,j} for 1 <= j < n
};

/// Root-location certificate for linear independence of the shifts of the
/// pseudo spline. Requires 1 <= n <= m.
IndependenceCertificate linear_independence_certificate(int d, int m, int n);

/// Residual |P' - rhs| of the derivative identity
/// P'(y) = m sum_l (1 - y/s_l)^(-1) [P(y)/s_l - c^l_{n-1} y^(n-1)],
/// s_l = sin^2(l pi / d). Returned together with |P'(y)| for scaling.
struct DerivativeIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};
DerivativeIdentity derivative_identity(int d, int m, int n, double y);

/// The Laurent polynomial 1 - h(y)^m P_{m,n}(y) in z.
LaurentPoly taylor_defect(int d, int m, int n);

}  // namespace framelet
