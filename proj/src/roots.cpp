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

#include "framelet/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace framelet {

Complex horner(std::span<const Complex> coeffs, Complex y) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

double horner(std::span<const double> coeffs, double y) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == Complex{}) --deg;
  if (deg <= 1) return {};
  --deg;
  const std::span<const Complex> p = coeffs.first(deg + 1);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                      static_cast<Eigen::Index>(deg));
  const Complex lead = p[deg];
  for (std::size_t j = 0; j < deg; ++j) {
    companion(0, static_cast<Eigen::Index>(j)) = -p[deg - 1 - j] / lead;
  }
  for (std::size_t i = 1; i < deg; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);

  std::vector<Complex> dp(deg);
  for (std::size_t k = 1; k <= deg; ++k) dp[k - 1] = static_cast<double>(k) * p[k];

  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Complex r = solver.eigenvalues()(i);
    for (int step = 0; step < 2; ++step) {
      const Complex slope = horner(dp, r);
      if (std::abs(slope) == 0.0) break;
      const Complex next = r - horner(p, r) / slope;
      // Keep the eigenvalue when Newton would move it off a cluster.
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      if (std::abs(horner(p, next)) > std::abs(horner(p, r))) break;
      r = next;
    }
    roots.push_back(r);
  }
  return roots;
}

std::vector<Complex> polynomial_roots(std::span<const double> coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  return polynomial_roots(std::span<const Complex>(c));
}

}  // namespace framelet
