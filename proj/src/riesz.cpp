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

#include "framelet/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "framelet/errors.hpp"
#include "framelet/pseudospline.hpp"
#include "framelet/roots.hpp"

namespace framelet {
namespace {

constexpr double kUnitCircleTol = 1e-6;

// Least-squares quotient of sum_k p[k] w^k by (1 - w)^order. Repeated
// synthetic division amplifies rounding by roughly deg^order / order!.
std::vector<Complex> divide_by_one_minus_w(const std::vector<Complex>& p, int order, double& residual) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  const Eigen::Index qn = n - order;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(order + 1);
  b(0) = 1.0;
  for (int k = 0; k < order; ++k) {
    for (int j = k + 1; j >= 1; --j) b(j) -= b(j - 1);
  }
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, qn);
  for (Eigen::Index c = 0; c < qn; ++c) A.block(c, c, order + 1, 1) = b.cast<Complex>();
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = p[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd q = A.colPivHouseholderQr().solve(rhs);
  residual = (A * q - rhs).cwiseAbs().maxCoeff();
  return {q.data(), q.data() + qn};
}

}  // namespace

LaurentPoly uep_deficit(const LaurentPoly& a0, int d) {
  if (d < 2) throw InvalidArgument("uep_deficit: d must be at least 2");
  const LaurentPoly r = mod_square(a0);
  if (r.is_zero()) return LaurentPoly::constant(1.0);

  // Only exponents divisible by d survive sum_g |a_{0;g}(z^d)|^2.
  const int wlo = -((-r.low()) / d);
  const int whi = r.high() / d;
  std::vector<Complex> w_coeffs(static_cast<std::size_t>(whi - wlo + 1));
  for (int k = wlo; k <= whi; ++k) w_coeffs[static_cast<std::size_t>(k - wlo)] = static_cast<double>(d) * r[d * k];
  LaurentPoly deficit = LaurentPoly::constant(1.0) - LaurentPoly(wlo, std::move(w_coeffs));
  deficit = deficit.chopped_abs(1e-15);
  // Enforce D = D^* exactly.
  return (deficit + star(deficit)) / 2.0;
}

double min_on_circle(const LaurentPoly& D, int samples) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    lo = std::min(lo, eval(D, 2.0 * std::numbers::pi * i / samples).real());
  }
  return lo;
}

LaurentPoly riesz_factor(const LaurentPoly& D) {
  if (D.is_zero()) return {};
  const double scale = D.max_abs();
  if (max_abs_diff(D, star(D)) > 1e-10 * scale) throw PreconditionError("riesz_factor: D is not Hermitian");
  if (min_on_circle(D) < -kPosTol * scale) throw PreconditionError("riesz_factor: D is not nonnegative");
  if (D.low() != -D.high()) throw PreconditionError("riesz_factor: D is not centred at 0");

  const int order = zero_order_at_one(D, 1e-9);
  if (order % 2 != 0) throw NumericalBreakdown("riesz_factor: zero at w = 1 of odd order");

  std::vector<Complex> p(D.coeffs().begin(), D.coeffs().end());
  if (order > 0) {
    double rem = 0.0;
    p = divide_by_one_minus_w(p, order, rem);
    if (rem > 1e-8 * scale) throw NumericalBreakdown("riesz_factor: inexact deflation at w = 1");
  }

  std::vector<Complex> chosen;
  std::vector<Complex> on_circle;
  for (const Complex r : polynomial_roots(std::span<const Complex>(p))) {
    const double mod = std::abs(r);
    if (mod < 1.0 - kUnitCircleTol) {
      chosen.push_back(r);
    } else if (mod <= 1.0 + kUnitCircleTol) {
      on_circle.push_back(r);
    }
  }
  // Unit-circle roots away from w = 1 must come in coincident pairs.
  std::vector<bool> taken(on_circle.size(), false);
  for (std::size_t i = 0; i < on_circle.size(); ++i) {
    if (taken[i]) continue;
    std::vector<std::size_t> cluster{i};
    for (std::size_t k = i + 1; k < on_circle.size(); ++k) {
      if (!taken[k] && std::abs(on_circle[k] - on_circle[i]) <= kUnitCircleTol) cluster.push_back(k);
    }
    if (cluster.size() % 2 != 0) {
      throw NumericalBreakdown("riesz_factor: unit-circle root of odd multiplicity");
    }
    Complex mean{};
    for (const std::size_t k : cluster) {
      taken[k] = true;
      mean += on_circle[k];
    }
    mean /= static_cast<double>(cluster.size());
    for (std::size_t k = 0; k < cluster.size() / 2; ++k) chosen.push_back(mean);
  }
  const std::size_t expected = (p.size() - 1) / 2;
  if (chosen.size() != expected) throw NumericalBreakdown("riesz_factor: roots do not pair as (r, 1/conj r)");

  LaurentPoly m = LaurentPoly::constant(1.0);
  for (int i = 0; i < order / 2; ++i) m *= LaurentPoly(0, {1.0, -1.0});
  for (const Complex r : chosen) m *= LaurentPoly(0, {-r, 1.0});

  const LaurentPoly m2 = mod_square(m);
  Complex num{};
  double den = 0.0;
  for (int k = m2.low(); k <= m2.high(); ++k) {
    num += D[k] * std::conj(m2[k]);
    den += std::norm(m2[k]);
  }
  if (num.real() <= 0.0) throw NumericalBreakdown("riesz_factor: nonpositive scale");
  LaurentPoly b = m * std::sqrt(num.real() / den);

  b = b.shifted(-b.low());
  const Complex lead = b[0];
  b *= std::conj(lead) / std::abs(lead);

  bool real_input = true;
  for (const Complex c : D.coeffs()) real_input = real_input && std::abs(c.imag()) <= 1e-12 * scale;
  if (real_input) {
    std::vector<Complex> re;
    for (const Complex c : b.coeffs()) re.emplace_back(c.real(), 0.0);
    b = LaurentPoly(b.low(), std::move(re));
  }
  if (max_abs_diff(mod_square(b), D) > 1e-8 * scale) {
    throw NumericalBreakdown("riesz_factor: factor does not reproduce D");
  }
  return b;
}

LaurentPoly closed_form_b0(int d, int n) {
  if (d < 2 || n < 1) throw InvalidArgument("closed_form_b0: need d >= 2 and n >= 1");
  const double dd = static_cast<double>(d);
  const LaurentPoly y(-1, {-1.0 / (4 * dd * dd), 2.0 / (4 * dd * dd), -1.0 / (4 * dd * dd)});
  LaurentPoly b = LaurentPoly(0, {1.0 / (2 * dd), -1.0 / (2 * dd)}) * std::sqrt(c_coeff(d, 2 * n, 2 * n - 1));
  for (int i = 0; i < n - 1; ++i) b *= y;
  return b;
}

}  // namespace framelet
