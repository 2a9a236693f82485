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

#include "framelet/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "framelet/errors.hpp"

namespace framelet {
namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

}  // namespace

Complex SampledFunction::at(long grid_index) const {
  if (grid_index < first || grid_index > last()) return 0.0;
  return values[static_cast<std::size_t>(grid_index - first)];
}

Refinement refine(const LaurentPoly& a, int d, int levels) {
  if (d < 2) throw InvalidArgument("refine: d must be at least 2");
  if (levels < 0 || levels > kMaxLevels) throw InvalidArgument("refine: levels must be in [0, 12]");
  if (a.is_zero()) throw InvalidArgument("refine: zero refinement mask");
  if (std::abs(eval(a, 0.0) - 1.0) > 1e-9) throw PreconditionError("refine: mask does not sum to 1");
  long scale = 1;
  for (int k = 0; k < levels; ++k) {
    scale *= d;
    if (scale > kMaxGrid) throw InvalidArgument("refine: d^levels exceeds 2^24 grid points");
  }

  // Start from the hat of width 1 centred at the symmetry centre of the mask
  // so every iterate keeps the symmetry of phi. When a(s - k) = a(k) the
  // centre is s / (2(d-1)), a grid point of (1/D) Z.
  long D = 1;
  long hD = 0;
  if (const auto sym = sym_of(a, 1e-9); sym && !sym->is_wildcard() && sym->epsilon == 1 && sym->center2 != 0) {
    const long num = sym->center2, den = 2L * (d - 1);
    D = den / std::gcd(std::labs(num), den);
    hD = num * D / den;
  }
  const auto mask = a.coeffs();
  const double dd = static_cast<double>(d);
  Refinement out;
  SampledFunction v{hD - D + 1, D, {}};
  for (long j = v.first; j < hD + D; ++j) v.values.emplace_back(1.0 - static_cast<double>(std::labs(j - hD)) / static_cast<double>(D));
  int growth = 0;
  for (int k = 0; k < levels; ++k) {
    // phi_{k+1}(n / dS) = d sum_j a(j) phi_k((n - j S) / S), exact at the knots.
    const long S = v.scale;
    SampledFunction next;
    next.first = v.first + a.low() * S;
    next.scale = S * d;
    next.values.assign(v.values.size() + (mask.size() - 1) * static_cast<std::size_t>(S), 0.0);
    for (std::size_t t = 0; t < mask.size(); ++t) {
      const Complex c = dd * mask[t];
      if (c == 0.0) continue;
      Complex* dst = next.values.data() + t * static_cast<std::size_t>(S);
      for (std::size_t j = 0; j < v.values.size(); ++j) dst[j] += c * v.values[j];
    }

    double diff = 0.0;
    const long lo = std::min(v.first, floor_div(next.first, d));
    const long hi = std::max(v.last(), floor_div(next.last(), d));
    for (long i = lo; i <= hi; ++i) diff = std::max(diff, std::abs(next.at(d * i) - v.at(i)));
    if (!out.sup_diff.empty() && diff > out.sup_diff.back()) {
      if (++growth >= 3) out.diverging = true;
    } else {
      growth = 0;
    }
    out.sup_diff.push_back(diff);
    v = std::move(next);
  }
  out.phi = std::move(v);
  return out;
}

SampledFunction wavelet_samples(const LaurentPoly& a_l, const SampledFunction& phi, int d) {
  if (d < 2) throw InvalidArgument("wavelet_samples: d must be at least 2");
  SampledFunction psi;
  psi.scale = phi.scale;
  if (a_l.is_zero() || phi.values.empty()) {
    psi.values = {0.0};
    return psi;
  }
  const long S = phi.scale;
  // phi(d t - j) with t = n / S sits at grid index d n - j S.
  const long lo = -floor_div(-(phi.first + a_l.low() * S), d);
  const long hi = floor_div(phi.last() + a_l.high() * S, d);
  psi.first = lo;
  psi.values.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
  const double dd = static_cast<double>(d);
  for (long n = lo; n <= hi; ++n) {
    Complex acc = 0.0;
    for (int j = a_l.low(); j <= a_l.high(); ++j) acc += a_l[j] * phi.at(d * n - j * S);
    psi.values[static_cast<std::size_t>(n - lo)] = dd * acc;
  }
  return psi;
}

double symmetry_defect(const SampledFunction& f, Rational c, int epsilon) {
  if (f.values.empty()) return 0.0;
  const double eps = static_cast<double>(epsilon);
  double worst = 0.0;
  if ((c.num * f.scale) % c.den == 0) {
    const long mirror = c.num * f.scale / c.den;
    for (long i = f.first; i <= f.last(); ++i) {
      worst = std::max(worst, std::abs(f.at(mirror - i) - eps * f.at(i)));
    }
    return worst;
  }
  const double mirror = c.value() * static_cast<double>(f.scale);
  for (long i = f.first; i <= f.last(); ++i) {
    const double x = mirror - static_cast<double>(i);
    const long k = static_cast<long>(std::floor(x));
    const double w = x - static_cast<double>(k);
    const Complex mv = (1.0 - w) * f.at(k) + w * f.at(k + 1);
    worst = std::max(worst, std::abs(mv - eps * f.at(i)));
  }
  return worst;
}

std::vector<SampledFunction> wavelet_samples(const FilterBank& bank, int levels) {
  return cascade(bank, levels).psi;
}

CascadeResult cascade(const FilterBank& bank, int levels) {
  CascadeResult out;
  out.refinement = refine(bank.lowpass, bank.d, levels);
  for (const auto& hp : bank.highpass) out.psi.push_back(wavelet_samples(hp.poly, out.refinement.phi, bank.d));
  return out;
}

}  // namespace framelet
