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

#include "framelet/pseudospline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "framelet/errors.hpp"
#include "framelet/roots.hpp"

namespace framelet {
namespace {

using Real = long double;

// sin^2(k pi / d) in extended precision.
Real sin2(int k, int d) {
  const Real s = std::sin(static_cast<Real>(k) * std::numbers::pi_v<Real> / static_cast<Real>(d));
  return s * s;
}

Real binomial(int top, int k) {
  Real r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Real>(top - k + i) / static_cast<Real>(i);
  return r;
}

// Calls visit(parts) for every composition of total into `count` nonnegative
// parts.
void for_each_composition(int total, int count, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(count), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == count - 1) {
      parts[static_cast<std::size_t>(idx)] = left;
      visit(parts);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, total);
}

Real c_coeff_ext(int d, int m, int j) {
  Real total = 0.0L;
  for_each_composition(j, d - 1, [&](const std::vector<int>& parts) {
    Real term = 1.0L;
    for (int k = 1; k <= d - 1; ++k) {
      const int jk = parts[static_cast<std::size_t>(k - 1)];
      term *= binomial(m - 1 + jk, jk) / std::pow(sin2(k, d), static_cast<Real>(jk));
    }
    total += term;
  });
  return total;
}

template <typename T>
LaurentPoly in_sin2_impl(const std::vector<T>& q) {
  const LaurentPoly y(-1, {-0.25, 0.5, -0.25});
  LaurentPoly acc;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * y + LaurentPoly::constant(*it);
  return acc;
}

}  // namespace

void PseudoSplineParams::validate() const {
  if (d < 2 || d > kMaxDilation) {
    throw InvalidArgument("dilation d must lie in [2, " + std::to_string(kMaxDilation) + "], got " +
                          std::to_string(d));
  }
  if (m < 1 || m > kMaxSumRules) {
    throw InvalidArgument("sum-rule order m must lie in [1, " + std::to_string(kMaxSumRules) + "], got " +
                          std::to_string(m));
  }
  if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  if (2 * n - 1 > m) {
    throw InvalidArgument("need 2n-1 <= m, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

double c_coeff(int d, int m, int j) {
  if (d < 2 || m < 1 || j < 0) throw InvalidArgument("c_coeff: need d >= 2, m >= 1, j >= 0");
  return static_cast<double>(c_coeff_ext(d, m, j));
}

RealPoly poly_P(int d, int m, int n) {
  if (n < 1) throw InvalidArgument("poly_P: n must be at least 1");
  RealPoly p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = c_coeff(d, m, j);
  return p;
}

RealPoly poly_h(int d) {
  if (d < 2) throw InvalidArgument("poly_h: d must be at least 2");
  std::vector<Real> h{1.0L};
  for (int k = 1; k <= d - 1; ++k) {
    const Real r = -1.0L / sin2(k, d);
    std::vector<Real> next(h.size() + 1, 0.0L);
    for (std::size_t i = 0; i < h.size(); ++i) {
      next[i] += h[i];
      next[i + 1] += h[i] * r;
    }
    h = std::move(next);
  }
  return RealPoly(h.begin(), h.end());
}

ComplexPoly poly_Q(int d, int m, int n) {
  if (n < 1 || 2 * n - 1 > m) throw PreconditionError("poly_Q: need 1 <= n and 2n-1 <= m");
  const RealPoly p = poly_P(d, m, 2 * n - 1);
  std::vector<Complex> roots = polynomial_roots(std::span<const double>(p));

  std::vector<Complex> upper;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Complex z = roots[i];
    const double tol = 1e-8 * (1.0 + std::abs(z));
    if (std::abs(z.imag()) <= tol) {
      throw NumericalBreakdown("poly_Q: P has a (numerically) real root; the positive factor cannot be split");
    }
    if (z.imag() < 0.0) continue;
    bool paired = false;
    for (std::size_t k = 0; k < roots.size() && !paired; ++k) {
      if (used[k] || roots[k].imag() >= 0.0) continue;
      if (std::abs(z - std::conj(roots[k])) <= tol) {
        used[k] = true;
        paired = true;
      }
    }
    if (!paired) throw NumericalBreakdown("poly_Q: root without conjugate partner");
    upper.push_back(z);
  }
  if (static_cast<int>(upper.size()) != n - 1) throw NumericalBreakdown("poly_Q: unexpected root count");
  std::sort(upper.begin(), upper.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  ComplexPoly q{1.0};
  for (const Complex z : upper) {
    ComplexPoly next(q.size() + 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] += q[i];
      next[i + 1] -= q[i] / z;
    }
    q = std::move(next);
  }
  return q;
}

LaurentPoly in_sin2(const ComplexPoly& q) { return in_sin2_impl(q); }
LaurentPoly in_sin2(const RealPoly& q) { return in_sin2_impl(q); }

Support lowpass_support(const PseudoSplineParams& params) {
  const int f = params.shift();
  return {-f - params.n + 1, f + params.n - 1 + params.eps()};
}

Lowpass lowpass(const PseudoSplineParams& params) {
  params.validate();
  const int d = params.d;
  const LaurentPoly box(0, std::vector<Complex>(static_cast<std::size_t>(d), 1.0 / d));
  LaurentPoly a = LaurentPoly::constant(1.0);
  for (int i = 0; i < params.m; ++i) a *= box;
  a *= in_sin2(poly_Q(d, params.m, params.n));
  a = a.shifted(-params.shift());
  // a(1) = Q(0) = 1 in exact arithmetic; the expansion of Q in z loses a few
  // digits to cancellation for larger m.
  a *= 1.0 / eval(a, 0.0);

  // Remove rounding asymmetry: a_{eps-k} = a_k holds exactly in theory.
  const int eps = params.eps();
  std::vector<Complex> sym(a.coeffs().size());
  for (int k = a.low(); k <= a.high(); ++k) sym[static_cast<std::size_t>(k - a.low())] = 0.5 * (a[k] + a[eps - k]);
  return {LaurentPoly(a.low(), std::move(sym)), SymmetrySpec{1, eps, SymmetrySpec::Kind::exact}};
}

IndependenceCertificate linear_independence_certificate(int d, int m, int n) {
  if (n < 1 || n > m) throw InvalidArgument("linear_independence_certificate: need 1 <= n <= m");
  const RealPoly c = poly_P(d, m, n);
  IndependenceCertificate cert;
  RealPoly scaled(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) scaled[j] = std::ldexp(c[j], -static_cast<int>(j));
  for (const Complex r : polynomial_roots(std::span<const double>(scaled))) {
    cert.max_root_modulus = std::max(cert.max_root_modulus, std::abs(r));
  }
  for (std::size_t j = 1; j < c.size(); ++j) cert.monotone = cert.monotone && (2.0 * c[j - 1] < c[j]);
  return cert;
}

DerivativeIdentity derivative_identity(int d, int m, int n, double y) {
  const RealPoly p = poly_P(d, m, n);
  RealPoly dp;
  for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(static_cast<double>(k) * p[k]);
  const Real pv = horner(std::span<const double>(p), y);

  Real rhs = 0.0L;
  for (int l = 1; l <= d - 1; ++l) {
    Real cl = 0.0L;
    for_each_composition(n - 1, d - 1, [&](const std::vector<int>& parts) {
      Real term = 1.0L;
      for (int k = 1; k <= d - 1; ++k) {
        const int jk = parts[static_cast<std::size_t>(k - 1)];
        if (k == l) {
          term *= binomial(m + jk, jk) / std::pow(sin2(k, d), static_cast<Real>(jk + 1));
        } else {
          term *= binomial(m - 1 + jk, jk) / std::pow(sin2(k, d), static_cast<Real>(jk));
        }
      }
      cl += term;
    });
    const Real s = sin2(l, d);
    rhs += (pv / s - cl * std::pow(static_cast<Real>(y), static_cast<Real>(n - 1))) / (1.0L - y / s);
  }
  return {horner(std::span<const double>(dp), y), static_cast<double>(m * rhs)};
}

LaurentPoly taylor_defect(int d, int m, int n) {
  const LaurentPoly h = in_sin2(poly_h(d));
  LaurentPoly acc = in_sin2(poly_P(d, m, n));
  for (int i = 0; i < m; ++i) acc *= h;
  return LaurentPoly::constant(1.0) - acc;
}

}  // namespace framelet
