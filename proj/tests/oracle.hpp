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

// Independent reference computations used by the tests. Nothing here calls
// into the library's arithmetic beyond reading coefficients, so agreement
// with the library is a real cross-check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "framelet/filter_bank.hpp"
#include "framelet/laurent.hpp"
#include "framelet/poly_matrix.hpp"

namespace oracle {

using framelet::Complex;
using framelet::LaurentPoly;
using Sparse = std::map<int, Complex>;

inline Sparse to_sparse(const LaurentPoly& p) {
  Sparse s;
  if (p.is_zero()) return s;
  for (int k = p.low(); k <= p.high(); ++k) {
    if (p[k] != 0.0) s[k] = p[k];
  }
  return s;
}

inline LaurentPoly from_sparse(const Sparse& s) {
  if (s.empty()) return {};
  const int lo = s.begin()->first;
  const int hi = s.rbegin()->first;
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [k, v] : s) c[static_cast<std::size_t>(k - lo)] = v;
  return LaurentPoly(lo, c);
}

inline Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  return out;
}

/// sum_k p_k e^{-i k xi}, evaluated term by term.
inline Complex eval(const LaurentPoly& p, double xi) {
  Complex acc = 0.0;
  if (p.is_zero()) return acc;
  for (int k = p.low(); k <= p.high(); ++k) acc += p[k] * std::polar(1.0, -k * xi);
  return acc;
}

/// Coefficient of y^j in h(y)^(-m), from the power series of 1/h.
inline double c_coeff(int d, int m, int j) {
  // h(y) = prod_k (1 - y / s_k) as a truncated series.
  std::vector<long double> h(static_cast<std::size_t>(j + 1), 0.0L);
  h[0] = 1.0L;
  for (int k = 1; k < d; ++k) {
    const long double s = std::pow(std::sin(static_cast<long double>(k) * std::numbers::pi_v<long double> / d), 2);
    for (int i = j; i >= 1; --i) h[static_cast<std::size_t>(i)] -= h[static_cast<std::size_t>(i - 1)] / s;
  }
  // g = 1 / h by long division.
  std::vector<long double> g(static_cast<std::size_t>(j + 1), 0.0L);
  g[0] = 1.0L;
  for (int i = 1; i <= j; ++i) {
    long double acc = 0.0L;
    for (int k = 1; k <= i; ++k) acc += h[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(i - k)];
    g[static_cast<std::size_t>(i)] = -acc;
  }
  std::vector<long double> r(static_cast<std::size_t>(j + 1), 0.0L);
  r[0] = 1.0L;
  for (int p = 0; p < m; ++p) {
    std::vector<long double> t(r.size(), 0.0L);
    for (int a = 0; a <= j; ++a)
      for (int b = 0; a + b <= j; ++b) t[static_cast<std::size_t>(a + b)] += r[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
    r = t;
  }
  return static_cast<double>(r[static_cast<std::size_t>(j)]);
}

/// max over xi samples and k of |sum_l a_l(xi) conj(a_l(xi + 2 pi k/d)) - delta_k|.
inline double uep_frequency_residual(const framelet::FilterBank& bank, int samples = 64) {
  std::vector<LaurentPoly> filters{bank.lowpass};
  for (const auto& hp : bank.highpass) filters.push_back(hp.poly);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double xi = 2.0 * std::numbers::pi * (s + 0.37) / samples;
    for (int k = 0; k < bank.d; ++k) {
      const double shift = 2.0 * std::numbers::pi * k / bank.d;
      Complex acc = 0.0;
      for (const auto& a : filters) acc += oracle::eval(a, xi) * std::conj(oracle::eval(a, xi + shift));
      worst = std::max(worst, std::abs(acc - (k == 0 ? 1.0 : 0.0)));
    }
  }
  return worst;
}

/// Raw moments sum_j j^s a_j; order of the zero at z = 1 is the number of
/// leading moments that vanish within tau times sum_j |j|^s |a_j|.
inline int vanishing_moments(const LaurentPoly& a, double tau = 1e-9) {
  int k = 0;
  for (int s = 0; s < 40; ++s) {
    Complex mom = 0.0;
    double scale = 0.0;
    for (int j = a.low(); j <= a.high(); ++j) {
      const double w = s == 0 ? 1.0 : std::pow(static_cast<double>(j), s);
      mom += w * a[j];
      scale += std::abs(w) * std::abs(a[j]);
    }
    if (std::abs(mom) > tau * std::max(scale, 1e-300)) break;
    ++k;
  }
  return k;
}

/// True when p_{c - k} = eps p_k for every k, within tol.
inline bool has_symmetry(const LaurentPoly& p, int eps, int c, double tol) {
  if (p.is_zero()) return true;
  for (int k = p.low(); k <= p.high(); ++k) {
    if (std::abs(p[c - k] - static_cast<double>(eps) * p[k]) > tol) return false;
  }
  return p[c - p.low()] != 0.0 || std::abs(p[p.low()]) <= tol;
}

/// 1 - sum_g |a_{0;g}|^2 from the coefficients: the z^k coefficient is
/// -d sum_j a(i) conj(a(j)) over i - j = d k, plus 1 at k = 0.
inline LaurentPoly uep_deficit(const LaurentPoly& a, int d) {
  Sparse out{{0, 1.0}};
  for (int i = a.low(); i <= a.high(); ++i)
    for (int j = a.low(); j <= a.high(); ++j) {
      if ((i - j) % d != 0) continue;
      out[(i - j) / d] -= static_cast<double>(d) * a[i] * std::conj(a[j]);
    }
  return from_sparse(out);
}

/// True when D is a constant multiple of (2 - w - 1/w)^k, the only case in
/// which its spectral factor (roots in the closed disk) is symmetric.
inline bool is_power_of_sin2(const LaurentPoly& D, double tol) {
  double scale = 0.0;
  for (int k = D.low(); k <= D.high(); ++k) scale = std::max(scale, std::abs(D[k]));
  int lo = D.low(), hi = D.high();
  while (lo <= hi && std::abs(D[lo]) <= tol * scale) ++lo;
  while (hi >= lo && std::abs(D[hi]) <= tol * scale) --hi;
  if (lo > hi || lo != -hi) return false;
  const int n = 2 * hi;
  const Complex c = D[lo];
  double binom = 1.0;
  for (int j = 0; j <= n; ++j) {
    const double want = (j % 2 == 0 ? 1.0 : -1.0) * binom;
    if (std::abs(D[lo + j] - c * want) > tol * scale) return false;
    binom = binom * (n - j) / (j + 1);
  }
  return true;
}

/// Number of high-pass filters the construction must produce.
inline int expected_generators(int d, int m, int n, const LaurentPoly& a0) {
  if (m == 2 * n - 1) return d - 1;
  if (m == 2 * n) return d;
  return is_power_of_sin2(oracle::uep_deficit(a0, d), 1e-9) ? d : d + 1;
}

inline LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::normal_distribution<double> g;
  std::vector<Complex> c;
  for (int k = lo; k <= hi; ++k) c.emplace_back(g(rng), g(rng));
  return LaurentPoly(lo, c);
}

/// Unit row vector with per-entry symmetry, built from symmetry-preserving
/// paraunitary moves applied to e_1.
struct SymmetricUnitVector {
  std::vector<LaurentPoly> entries;
  std::vector<framelet::SymmetrySpec> syms;
};

inline SymmetricUnitVector random_symmetric_unit_vector(std::mt19937& rng, int max_support = 12) {
  std::uniform_int_distribution<int> size_dist(2, 6);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int s = size_dist(rng);
  // classes: 0 -> 1, 1 -> -1, 2 -> z^-1, 3 -> -z^-1, all centred near 0
  std::vector<int> cls(static_cast<std::size_t>(s));
  for (auto& c : cls) c = std::uniform_int_distribution<int>(0, 3)(rng);
  cls[0] = 0;
  std::vector<Sparse> q(static_cast<std::size_t>(s));
  q[0][0] = 1.0;

  auto support_len = [](const Sparse& p) { return p.empty() ? 0 : p.rbegin()->first - p.begin()->first; };
  auto max_len = [&] {
    int w = 0;
    for (const auto& p : q) w = std::max(w, support_len(p));
    return w;
  };
  auto combine = [&](int i, int j, const Sparse& aii, const Sparse& aij, const Sparse& aji, const Sparse& ajj) {
    // [q_i, q_j] <- [q_i, q_j] [[aii, aij], [aji, ajj]]
    Sparse ni = mul(q[static_cast<std::size_t>(i)], aii);
    for (const auto& [k, v] : mul(q[static_cast<std::size_t>(j)], aji)) ni[k] += v;
    Sparse nj = mul(q[static_cast<std::size_t>(i)], aij);
    for (const auto& [k, v] : mul(q[static_cast<std::size_t>(j)], ajj)) nj[k] += v;
    q[static_cast<std::size_t>(i)] = ni;
    q[static_cast<std::size_t>(j)] = nj;
  };

  const int moves = std::uniform_int_distribution<int>(4, 16)(rng);
  for (int mv = 0; mv < moves; ++mv) {
    const int i = std::uniform_int_distribution<int>(0, s - 1)(rng);
    const int j = std::uniform_int_distribution<int>(0, s - 1)(rng);
    if (i == j) continue;
    const int ci = cls[static_cast<std::size_t>(i)], cj = cls[static_cast<std::size_t>(j)];
    if (ci == cj) {
      // constant unitary inside one class
      const double t = 2 * std::numbers::pi * uni(rng), ph = 2 * std::numbers::pi * uni(rng);
      const Complex c = std::cos(t), sn = std::sin(t) * std::polar(1.0, ph);
      combine(i, j, {{0, c}}, {{0, -std::conj(sn)}}, {{0, sn}}, {{0, std::conj(c)}});
    } else if ((ci == 0 && cj == 1) || (ci == 2 && cj == 3)) {
      if (max_len() + 2 > max_support) continue;
      if (uni(rng) < 0.5) {
        // [[(z+1/z)/2, (z-1/z)/2], [(z-1/z)/2, (z+1/z)/2]] keeps both classes
        const Sparse c{{-1, 0.5}, {1, 0.5}}, sn{{-1, -0.5}, {1, 0.5}};
        combine(i, j, c, sn, sn, c);
      } else if (ci == 0) {
        // classes (1, -1) -> (z^-1, -z^-1)
        const Sparse u{{0, 0.5}, {-1, 0.5}}, v{{0, 0.5}, {-1, -0.5}};
        combine(i, j, u, v, v, u);
        cls[static_cast<std::size_t>(i)] = 2;
        cls[static_cast<std::size_t>(j)] = 3;
      } else {
        // classes (z^-1, -z^-1) -> (1, -1)
        const Sparse u{{0, 0.5}, {1, 0.5}}, v{{0, 0.5}, {1, -0.5}};
        combine(i, j, u, v, v, u);
        cls[static_cast<std::size_t>(i)] = 0;
        cls[static_cast<std::size_t>(j)] = 1;
      }
    }
  }

  SymmetricUnitVector out;
  std::vector<int> order(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const Complex phase = std::polar(1.0, 2 * std::numbers::pi * uni(rng));
  for (int idx : order) {
    const int c = cls[static_cast<std::size_t>(idx)];
    const int shift = std::uniform_int_distribution<int>(-2, 2)(rng);
    Sparse p;
    for (const auto& [k, v] : q[static_cast<std::size_t>(idx)]) p[k + shift] = v * phase;
    out.entries.push_back(from_sparse(p));
    const int eps = (c == 1 || c == 3) ? -1 : 1;
    const int base = c >= 2 ? -1 : 0;
    out.syms.push_back({eps, base + 2 * shift, framelet::SymmetrySpec::Kind::exact});
  }
  return out;
}

}  // namespace oracle
