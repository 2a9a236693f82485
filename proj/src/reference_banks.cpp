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

#include "framelet/reference_banks.hpp"

#include <cmath>

#include "framelet/errors.hpp"

namespace framelet {
namespace {

using namespace std::complex_literals;

LaurentPoly power(const LaurentPoly& p, int k) {
  LaurentPoly out = LaurentPoly::constant(1.0);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

// (1 + z)/2 for d = 2, (1/z + 1 + z)/3 for d = 3.
LaurentPoly box2() { return LaurentPoly(0, {0.5, 0.5}); }
LaurentPoly box3() { return LaurentPoly(-1, {1.0 / 3, 1.0 / 3, 1.0 / 3}); }

// z^-1 + z and friends, with a symmetric three-term bracket c z^-1 + b + c z.
LaurentPoly bracket(Complex outer, Complex middle) { return LaurentPoly(-1, {outer, middle, outer}); }

LaurentPoly sym_sum(const LaurentPoly& b, int eps, int shift) {
  return b + b.reflected().shifted(shift) * static_cast<double>(eps);
}

HighPass high(LaurentPoly poly, int eps, long center) { return {std::move(poly), eps, Rational::make(center, 1)}; }

LaurentPoly lowpass_d3_m4() {
  const double r5 = std::sqrt(5.0);
  return power(box3(), 4) * bracket(-4.0 / 3 - (2 * r5 / 3) * 1i, 11.0 / 3 + (4 * r5 / 3) * 1i);
}

}  // namespace

FilterBank reference_d2_m4_n2() {
  const double r6 = std::sqrt(6.0);
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  FilterBank bank;
  bank.d = 2;
  bank.m = 4;
  bank.n = 2;
  bank.generator = "reference ref-d2-m4-n2";
  const Complex outer = -0.5 - (r6 / 4) * 1i;
  bank.lowpass = power(box2(), 4) * LaurentPoly(-3, {outer, 2.0 + (r6 / 2) * 1i, outer});

  const LaurentPoly second = LaurentPoly(-1, {1.0, -2.0, 1.0});
  const LaurentPoly odd = LaurentPoly(-1, {-1.0, 0.0, 1.0});
  const Complex k1 = -std::sqrt(35.0) * (4 * r3 + r2 * 1i) / 11200.0;
  const Complex k2 = std::sqrt(7.0) * (r2 + r3 * 1i) / 560.0;
  bank.highpass.push_back(high(k1 * bracket(5.0, 26.0 + 2 * r6 * 1i) * second * second, 1, 0));
  bank.highpass.push_back(high(k2 * bracket(5.0, 16.0 + 2 * r6 * 1i) * second * odd, -1, 0));
  return bank;
}

FilterBank reference_d3_m4_n2() {
  const Complex ir5 = 1i * std::sqrt(5.0);
  const double r5 = std::sqrt(5.0);
  FilterBank bank;
  bank.d = 3;
  bank.m = 4;
  bank.n = 2;
  bank.generator = "reference ref-d3-m4-n2";
  bank.lowpass = lowpass_d3_m4();

  const LaurentPoly b1(0, {-3036.0 * ir5 - 2943.0, 1860.0 + 2328.0 * ir5, 1470.0 + 1224.0 * ir5, -258.0 * ir5,
                           -215.0 - 172.0 * ir5, -172.0 - 86.0 * ir5});
  const LaurentPoly b2(1, {3020.0 + 3508.0 * ir5, 1750.0 + 1832.0 * ir5, -978.0 * ir5, -815.0 - 652.0 * ir5,
                           -652.0 - 326.0 * ir5});
  const LaurentPoly b3(2, {-53 * r5 - 260.0i, 30.0i, 5 * r5 + 20.0i, 4 * r5 + 10.0i});
  bank.highpass.push_back(high(sym_sum(b1, 1, 0) * (std::sqrt(19178.0) / 4660254.0), 1, 0));
  bank.highpass.push_back(high(sym_sum(b2, -1, 0) * (std::sqrt(218094.0) / 17665614.0), -1, 0));
  bank.highpass.push_back(high(sym_sum(b3, -1, 3) * (2 * std::sqrt(1338.0) / 54189.0), -1, 1));
  return bank;
}

FilterBank reference_d3_m5_n2() {
  const double r30 = std::sqrt(30.0);
  FilterBank bank;
  bank.d = 3;
  bank.m = 5;
  bank.n = 2;
  bank.generator = "reference ref-d3-m5-n2";
  bank.lowpass = power(box3(), 5) * bracket(-5.0 / 3 - (r30 / 3) * 1i, 13.0 / 3 + (2 * r30 / 3) * 1i);

  // Coefficients of z^0 .. z^6, rounded to five decimals in the source. The
  // listed constant of b1 is the constant of a1 itself, hence the halving.
  const LaurentPoly b1(0, {(-0.38736 + 0.26298i) / 2.0, 0.13657 - 0.04144i, 0.06342 - 0.03967i, 0.01372 - 0.02716i,
                           -0.00951 - 0.01459i, -0.00744 - 0.00660i, -0.00307 - 0.00204i});
  const LaurentPoly b2(1, {-0.14727 - 0.03064i, -0.07035 - 0.00011i, -0.01370 + 0.03024i, 0.01353 + 0.04034i,
                           0.01353 + 0.02017i, 0.00601 + 0.00672i});
  const LaurentPoly b3(2, {-0.00043 + 0.20320i, 0.05891 - 0.08433i, -0.02392 - 0.07133i, -0.02392 - 0.03567i,
                           -0.01063 - 0.01189i});
  const LaurentPoly b4(2, {-0.23403 - 0.31140i, -0.02126 + 0.02655i, 0.00939 + 0.02800i, 0.00939 + 0.01400i,
                           0.00417 + 0.00467i});
  bank.highpass.push_back(high(sym_sum(b1, 1, 0), 1, 0));
  bank.highpass.push_back(high(sym_sum(b2, -1, 0), -1, 0));
  bank.highpass.push_back(high(sym_sum(b3, 1, 3), 1, 1));
  bank.highpass.push_back(high(sym_sum(b4, -1, 3), -1, 1));
  return bank;
}

FilterBank reference_d3_m4_n2_dual() {
  const Complex ir5 = 1i * std::sqrt(5.0);
  FilterBank bank;
  bank.d = 3;
  bank.m = 4;
  bank.n = 2;
  bank.generator = "reference ref-d3-m4-n2-dual";
  bank.lowpass = lowpass_d3_m4();

  const LaurentPoly b(0, {329387.0 / 2754 + (209689.0 / 1377) * ir5,
                          -(102661.0 / 816 + (5464379.0 / 22032) * ir5),
                          -(177727.0 / 2754 - (551620.0 / 4131) * ir5),
                          2967467.0 / 22032 - (1034833.0 / 22032) * ir5,
                          -375253.0 / 4131 + (158555.0 / 15147) * ir5,
                          24620753.0 / 727056 - (29059.0 / 22032) * ir5,
                          -24103.0 / 3366,
                          11.0 / 16 + (21391.0 / 727056) * ir5});
  bank.dual_lowpass = power(box3(), 8) * sym_sum(b, 1, 0);
  return bank;
}

std::vector<std::string> fixture_names() {
  return {"ref-d2-m4-n2", "ref-d3-m4-n2", "ref-d3-m5-n2", "ref-d3-m4-n2-dual"};
}

FilterBank fixture(const std::string& name) {
  if (name == "ref-d2-m4-n2") return reference_d2_m4_n2();
  if (name == "ref-d3-m4-n2") return reference_d3_m4_n2();
  if (name == "ref-d3-m5-n2") return reference_d3_m5_n2();
  if (name == "ref-d3-m4-n2-dual") return reference_d3_m4_n2_dual();
  throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace framelet
