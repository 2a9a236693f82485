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

#include <gtest/gtest.h>

#include <cmath>

#include "framelet/errors.hpp"
#include "framelet/pseudospline.hpp"
#include "framelet/riesz.hpp"
#include "oracle.hpp"

namespace framelet {
namespace {

LaurentPoly pw(const LaurentPoly& p, int k) {
  LaurentPoly out = LaurentPoly::constant(1.0);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

// (2 - w - 1/w) / s
LaurentPoly sin2_over(double s) { return LaurentPoly(-1, {-1.0 / s, 2.0 / s, -1.0 / s}); }

TEST(Riesz, DeficitVanishesForOrthogonalFamily) {
  EXPECT_TRUE(uep_deficit(lowpass({2, 3, 2}).symbol, 2).max_abs() <= 1e-13);
  EXPECT_TRUE(uep_deficit(LaurentPoly(0, {0.5, 0.5}), 2).max_abs() <= 1e-15);
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      const LaurentPoly D = uep_deficit(lowpass({d, 2 * n - 1, n}).symbol, d);
      EXPECT_LE(D.max_abs(), 1e-12) << d << ' ' << n;
    }
}

TEST(Riesz, DeficitClosedFormForEvenOrder) {
  const LaurentPoly want = pw(sin2_over(16.0), 3) * 20.0;
  EXPECT_LE(max_abs_diff(uep_deficit(lowpass({2, 4, 2}).symbol, 2), want), 1e-14);
}

TEST(Riesz, DeficitMatchesCoefficientOracle) {
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 7; ++m)
      for (int n = 1; 2 * n - 1 <= m; ++n) {
        const Lowpass a = lowpass({d, m, n});
        double energy = 0.0;
        for (int k = a.symbol.low(); k <= a.symbol.high(); ++k) energy += d * std::norm(a.symbol[k]);
        // products are trimmed at 1e-12 of their largest coefficient
        EXPECT_LE(max_abs_diff(uep_deficit(a.symbol, d), oracle::uep_deficit(a.symbol, d)), 2e-12 * energy) << d << m << n;
      }
}

TEST(Riesz, DeficitForDilationThreeOrderFive) {
  const LaurentPoly D = uep_deficit(lowpass({3, 5, 2}).symbol, 3);
  EXPECT_LE(max_abs_diff(D, oracle::uep_deficit(lowpass({3, 5, 2}).symbol, 3)), 1e-14);
  EXPECT_EQ(D.low(), -4);
  EXPECT_EQ(D.high(), 4);
  // zero of order 2(2n-1) at w = 1
  EXPECT_EQ(oracle::vanishing_moments(D, 1e-11), 6);
  // The listed closed form (1/19683)(1-w)(1-1/w)(4w^3 + ... + 4w^-3) has
  // only a double zero at w = 1 and is not the deficit of the listed
  // low-pass filter, which this library reproduces.
  const LaurentPoly listed = LaurentPoly(-1, {-1.0, 2.0, -1.0}) * LaurentPoly(-3, {4.0, 106.0, -541.0, 2320.0, -541.0, 106.0, 4.0}) / 19683.0;
  EXPECT_EQ(oracle::vanishing_moments(listed, 1e-11), 2);
  EXPECT_GT(max_abs_diff(D, listed), 1e-3);
}

TEST(Riesz, DeficitIsNonnegativeAndHermitian) {
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; 2 * n - 1 <= m; ++n) {
        const LaurentPoly D = uep_deficit(lowpass({d, m, n}).symbol, d);
        EXPECT_LE(max_abs_diff(D, star(D)), 1e-13);
        if (!D.is_zero()) EXPECT_GE(min_on_circle(D), -1e-12);
      }
}

TEST(Riesz, FactorExamples) {
  EXPECT_TRUE(riesz_factor(LaurentPoly()).is_zero());
  const LaurentPoly b = riesz_factor(sin2_over(4.0));
  ASSERT_EQ(b.high() - b.low(), 1);
  // (1 - w)/2 up to a unimodular constant and a shift
  EXPECT_NEAR(std::abs(b[b.low()]), 0.5, 1e-14);
  EXPECT_NEAR(std::abs(b[b.high()] + b[b.low()]), 0.0, 1e-14);
  EXPECT_LE(max_abs_diff(mod_square(b), sin2_over(4.0)), 1e-14);
}

TEST(Riesz, FactorOfDilationThreeDeficitHasLengthFour) {
  const LaurentPoly D = uep_deficit(lowpass({3, 5, 2}).symbol, 3);
  const LaurentPoly b = riesz_factor(D);
  EXPECT_EQ(b.low(), 0);
  EXPECT_EQ(b.high(), 4);
  EXPECT_LE(max_abs_diff(mod_square(b), D), 1e-8 * D.max_abs());
  // degree 4 with a triple zero at w = 1
  EXPECT_EQ(oracle::vanishing_moments(b, 1e-10), 3);
  for (int k = b.low(); k <= b.high(); ++k) EXPECT_EQ(b[k].imag(), 0.0);
}

TEST(Riesz, FactorReproducesEveryDeficit) {
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; 2 * n - 1 <= m; ++n) {
        const LaurentPoly D = uep_deficit(lowpass({d, m, n}).symbol, d);
        if (D.max_abs() <= 1e-12) continue;
        const LaurentPoly b = riesz_factor(D);
        EXPECT_LE(max_abs_diff(mod_square(b), D), 1e-8 * D.max_abs()) << d << m << n;
        EXPECT_EQ(b.low(), 0);
        EXPECT_GT(b[0].real(), 0.0);
        EXPECT_EQ(b[0].imag(), 0.0);
      }
}

TEST(Riesz, FactorRejectsNegativeInput) {
  EXPECT_THROW(riesz_factor(LaurentPoly::constant(-1.0)), PreconditionError);
  EXPECT_THROW(riesz_factor(LaurentPoly(-1, {1.0, 0.0, 0.0})), PreconditionError);
}

TEST(Riesz, ClosedFormExamples) {
  const LaurentPoly b1 = closed_form_b0(2, 1);
  EXPECT_LE(max_abs_diff(b1, LaurentPoly(0, {1.0, -1.0}) * (std::sqrt(2.0) / 4)), 1e-15);
  const LaurentPoly b2 = closed_form_b0(2, 2);
  const LaurentPoly want = sin2_over(16.0) * LaurentPoly(0, {1.0, -1.0}) * (std::sqrt(20.0) / 4);
  EXPECT_LE(max_abs_diff(b2, want), 1e-15);
  const LaurentPoly D = uep_deficit(lowpass({3, 4, 2}).symbol, 3);
  EXPECT_LE(max_abs_diff(mod_square(closed_form_b0(3, 2)), D), 1e-10);
}

TEST(Riesz, ClosedFormAgreesWithFactorization) {
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; 2 * n <= 10; ++n) {
      const LaurentPoly D = uep_deficit(lowpass({d, 2 * n, n}).symbol, d);
      const LaurentPoly b = riesz_factor(D);
      const LaurentPoly c = closed_form_b0(d, n);
      EXPECT_LE(max_abs_diff(mod_square(b), mod_square(c)), 1e-8 * D.max_abs()) << d << n;
      EXPECT_EQ(b.high() - b.low(), c.high() - c.low());
    }
}

}  // namespace
}  // namespace framelet
