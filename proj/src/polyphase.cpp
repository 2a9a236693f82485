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

#include "framelet/polyphase.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framelet/errors.hpp"
#include "framelet/riesz.hpp"

namespace framelet {
namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

int ceil_half(int c) { return -floor_div(-c, 2); }

// Attaches the symmetry known from the construction, after checking it
// against the data. Vanishing entries keep the planned symmetry.
PolyVector with_symmetry(const std::vector<LaurentPoly>& entries, const std::vector<SymmetrySpec>& planned,
                         double tau) {
  PolyVector v;
  v.entries = entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto s = sym_of(entries[i], tau);
    if (!s || (!s->is_wildcard() && *s != planned[i])) {
      throw NumericalBreakdown("symmetrized entry " + std::to_string(i) + " has no symmetry");
    }
    v.syms.push_back(planned[i]);
  }
  return v;
}

}  // namespace

std::vector<LaurentPoly> subsymbols(const LaurentPoly& a, int d) {
  if (d < 2) throw InvalidArgument("subsymbols: d must be at least 2");
  std::vector<LaurentPoly> subs(static_cast<std::size_t>(d));
  if (a.is_zero()) return subs;
  const double root_d = std::sqrt(static_cast<double>(d));
  for (int g = 0; g < d; ++g) {
    const int kmin = -floor_div(-(a.low() - g), d);
    const int kmax = floor_div(a.high() - g, d);
    if (kmin > kmax) continue;
    std::vector<Complex> c;
    for (int k = kmin; k <= kmax; ++k) c.push_back(root_d * a[g + d * k]);
    subs[static_cast<std::size_t>(g)] = LaurentPoly(kmin, std::move(c));
  }
  return subs;
}

LaurentPoly assemble_symbol(const std::vector<LaurentPoly>& subs, int d) {
  if (static_cast<int>(subs.size()) != d) throw InvalidArgument("assemble_symbol: need exactly d subsymbols");
  LaurentPoly a;
  for (int g = 0; g < d; ++g) a += subs[static_cast<std::size_t>(g)].upsampled(d).shifted(g);
  return a / std::sqrt(static_cast<double>(d));
}

RQ rq_split(int d, Rational c0, int gamma) {
  const long scaled = static_cast<long>(d - 1) * c0.num;
  if (scaled % c0.den != 0) throw InvalidArgument("rq_split: (d-1) c0 is not an integer");
  const int e = static_cast<int>(scaled / c0.den);
  const int R = floor_div(e - gamma, d);
  return {R, e - gamma - d * R};
}

Rational lowpass_center(const PseudoSplineParams& params) { return Rational::make(params.eps(), params.d - 1); }

SymmetrizationPlan plan_symmetrization(const std::vector<LaurentPoly>& subs, int d, Rational c0) {
  if (static_cast<int>(subs.size()) != d) throw InvalidArgument("plan_symmetrization: need exactly d subsymbols");
  SymmetrizationPlan plan{d, c0, {}};
  plan.entries.resize(static_cast<std::size_t>(d));
  for (int g = 0; g < d; ++g) {
    auto& e = plan.entries[static_cast<std::size_t>(g)];
    const RQ rq = rq_split(d, c0, g);
    e.R = rq.R;
    e.Q = rq.Q;
    e.role = rq.Q == g ? SymmetrizationPlan::Role::fixed
                       : (g < rq.Q ? SymmetrizationPlan::Role::plus : SymmetrizationPlan::Role::minus);
  }
  for (int g = 0; g < d; ++g) {
    auto& e = plan.entries[static_cast<std::size_t>(g)];
    if (e.role != SymmetrizationPlan::Role::plus) continue;
    const LaurentPoly& a = subs[static_cast<std::size_t>(g)];
    const LaurentPoly& b = subs[static_cast<std::size_t>(e.Q)];
    int best = 0;
    if (!a.is_zero() && !b.is_zero()) {
      const int aligned = a.low() - b.low();
      const int span = a.high() - a.low() + b.high() - b.low() + 2;
      int best_len = 0;
      bool first = true;
      for (int k = aligned - span; k <= aligned + span; ++k) {
        const LaurentPoly s = a + b.shifted(k);
        const int len = s.is_zero() ? -1 : s.high() - s.low();
        if (first || len < best_len) {
          best = k;
          best_len = len;
          first = false;
        }
      }
    }
    e.kappa = best;
    plan.entries[static_cast<std::size_t>(e.Q)].kappa = best;
  }
  return plan;
}

Symmetrized symmetrize(const std::vector<LaurentPoly>& subs, const SymmetrizationPlan& plan) {
  const int d = plan.d;
  if (static_cast<int>(subs.size()) != d || static_cast<int>(plan.entries.size()) != d) {
    throw InvalidArgument("symmetrize: size mismatch");
  }
  double scale = 0.0;
  for (const auto& s : subs) scale = std::max(scale, s.max_abs());
  for (int g = 0; g < d; ++g) {
    const auto& e = plan.entries[static_cast<std::size_t>(g)];
    const LaurentPoly mirrored = subs[static_cast<std::size_t>(e.Q)].reflected().shifted(e.R);
    if (max_abs_diff(subs[static_cast<std::size_t>(g)], mirrored) > kSymTol * std::max(scale, 1e-300)) {
      throw PreconditionError("symmetrize: coset " + std::to_string(g) + " violates a(z) = z^R a_Q(1/z)");
    }
  }

  const double h = 1.0 / std::sqrt(2.0);
  PolyMatrix U(d, d);
  std::vector<SymmetrySpec> planned(static_cast<std::size_t>(d));
  for (int g = 0; g < d; ++g) {
    const auto& e = plan.entries[static_cast<std::size_t>(g)];
    switch (e.role) {
      case SymmetrizationPlan::Role::fixed:
        U(g, g) = LaurentPoly::constant(1.0);
        planned[static_cast<std::size_t>(g)] = {1, e.R};
        break;
      case SymmetrizationPlan::Role::plus: {
        const int q = e.Q;
        U(g, g) = LaurentPoly::constant(h);
        U(q, g) = LaurentPoly::monomial(e.kappa, h);
        U(g, q) = LaurentPoly::monomial(-e.kappa, h);
        U(q, q) = LaurentPoly::constant(-h);
        planned[static_cast<std::size_t>(g)] = {1, e.R + e.kappa};
        planned[static_cast<std::size_t>(q)] = {-1, e.R - e.kappa};
        break;
      }
      case SymmetrizationPlan::Role::minus:
        break;
    }
  }
  std::vector<LaurentPoly> b = row_times(subs, U);
  Symmetrized out{with_symmetry(b, planned, 1e-9), U};
  return out;
}

UnitVector build_unit_vector(const LaurentPoly& a0, int d, Rational c0, const LaurentPoly* appended_hint) {
  const std::vector<LaurentPoly> subs = subsymbols(a0, d);
  const SymmetrizationPlan plan = plan_symmetrization(subs, d, c0);
  const Symmetrized sym = symmetrize(subs, plan);

  UnitVector out;
  out.original = subs;
  const LaurentPoly D = uep_deficit(a0, d);
  if (D.max_abs() <= 1e-12) {
    out.U = sym.U;
    out.p = sym.p;
    out.L = d - 1;
    return out;
  }

  LaurentPoly b = appended_hint ? *appended_hint : riesz_factor(D);
  if (max_abs_diff(mod_square(b), D) > 1e-8 * D.max_abs()) {
    throw NumericalBreakdown("build_unit_vector: appended entry does not cover the UEP deficit");
  }

  std::vector<SymmetrySpec> planned = sym.p.syms;
  const auto bsym = sym_of(b, 1e-10);
  if (bsym && !bsym->is_wildcard()) {
    const int shift = ceil_half(bsym->center2);
    out.original.push_back(b);
    out.U = block_diagonal(sym.U, PolyMatrix::diagonal({LaurentPoly::monomial(-shift)}));
    planned.push_back({bsym->epsilon, bsym->center2 - 2 * shift});
  } else {
    const int k = b.high() - b.low();
    const LaurentPoly B = b.shifted(-b.low() - ceil_half(k));
    const int s = B.low() + B.high();
    const double h = 1.0 / std::sqrt(2.0);
    out.original.push_back(B * h);
    out.original.push_back(B.reflected().shifted(s) * h);
    out.U = block_diagonal(sym.U, PolyMatrix::constant(2, 2, {h, h, h, -h}));
    planned.push_back({1, s});
    planned.push_back({-1, s});
  }
  out.p = with_symmetry(row_times(out.original, out.U), planned, 1e-9);
  out.L = static_cast<int>(out.original.size()) - 1;
  return out;
}

UnitVector build_unit_vector(const PseudoSplineParams& params) {
  params.validate();
  const Lowpass lp = lowpass(params);
  if (params.m == 2 * params.n) {
    const LaurentPoly b = closed_form_b0(params.d, params.n);
    return build_unit_vector(lp.symbol, params.d, lowpass_center(params), &b);
  }
  return build_unit_vector(lp.symbol, params.d, lowpass_center(params));
}

}  // namespace framelet
