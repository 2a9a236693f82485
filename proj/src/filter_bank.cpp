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

#include "framelet/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framelet/errors.hpp"
#include "framelet/polyphase.hpp"

namespace framelet {
namespace {

int support_length(const LaurentPoly& p) { return p.is_zero() ? 0 : p.high() - p.low(); }

// d c - c0 as an exponent; nullopt when it is not an integer.
std::optional<int> symmetry_exponent(Rational c, Rational c0, int d) {
  const long num = d * c.num * c0.den - c0.num * c.den;
  const long den = c.den * c0.den;
  if (num % den != 0) return std::nullopt;
  return static_cast<int>(num / den);
}

}  // namespace

bool VerificationReport::passed() const {
  if (biorthogonal_residual && !(*biorthogonal_residual <= tol)) return false;
  if (symmetry_ok.empty() && biorthogonal_residual) return lowpass_symmetric;
  if (!(uep_residual <= tol)) return false;
  if (!lowpass_symmetric || !support_ok || !vm_ok) return false;
  return std::all_of(symmetry_ok.begin(), symmetry_ok.end(), [](bool b) { return b; });
}

Rational symbol_center(const LaurentPoly& a, int d) {
  if (d < 2) throw InvalidArgument("symbol_center: d must be at least 2");
  const auto s = sym_of(a);
  if (!s || s->is_wildcard() || s->epsilon != 1) throw InvalidArgument("symbol_center: low-pass symbol is not symmetric");
  return Rational::make(s->center2, d - 1);
}

FilterBank construct(const PseudoSplineParams& params) {
  params.validate();
  const int d = params.d;
  const Lowpass lp = lowpass(params);
  const UnitVector uv = build_unit_vector(params);
  const Extension ext = extend(uv.p);
  const PolyMatrix P = ext.Pe * uv.U.adjoint();
  const int s = P.rows();
  const Rational c0 = lowpass_center(params);
  const int e = params.eps();

  auto first_d = [&](int r) {
    std::vector<LaurentPoly> row = P.row_entries(r);
    row.resize(static_cast<std::size_t>(d));
    return row;
  };
  if (max_abs_diff(assemble_symbol(first_d(0), d), lp.symbol) > 1e-9) {
    throw NumericalBreakdown("construct: completion lost the low-pass row");
  }

  FilterBank bank;
  bank.d = d;
  bank.m = params.m;
  bank.n = params.n;
  bank.lowpass = lp.symbol;
  for (int r = 1; r < s; ++r) {
    LaurentPoly a = assemble_symbol(first_d(r), d).chopped_abs(1e-14);
    // A row supported only on appended columns contributes no filter.
    if (a.max_abs() <= 1e-12) continue;
    const auto& rs = ext.row_syms[static_cast<std::size_t>(r)];
    const int C = d * rs.center2 + e;
    const auto found = sym_of(a, 1e-8);
    if (!found || found->epsilon != rs.epsilon || found->center2 != C) {
      throw NumericalBreakdown("construct: high-pass filter " + std::to_string(r) + " lost its symmetry");
    }
    a = (a + a.reflected().shifted(C) * static_cast<double>(rs.epsilon)) * 0.5;
    HighPass hp;
    hp.poly = a;
    hp.epsilon = rs.epsilon;
    hp.center = Rational::make(static_cast<long>(rs.center2) * c0.den + c0.num, c0.den);
    bank.highpass.push_back(std::move(hp));
  }
  bank.trace = ext.trace;
  return bank;
}

PolyMatrix polyphase_matrix(const FilterBank& bank) {
  const int d = bank.d;
  PolyMatrix P(bank.L() + 1, d);
  auto put = [&](int r, const LaurentPoly& a) {
    const auto subs = subsymbols(a, d);
    for (int g = 0; g < d; ++g) P(r, g) = subs[static_cast<std::size_t>(g)];
  };
  put(0, bank.lowpass);
  for (int l = 0; l < bank.L(); ++l) put(l + 1, bank.highpass[static_cast<std::size_t>(l)].poly);
  return P;
}

VerificationReport verify(const FilterBank& bank, double tol) {
  if (bank.d < 2) throw InvalidArgument("verify: dilation must be at least 2");
  if (bank.lowpass.is_zero()) throw InvalidArgument("verify: empty low-pass filter");
  VerificationReport rep;
  rep.tol = tol;
  const int d = bank.d;
  const double sym_tau = std::max(kSymTol, tol);
  const double vm_tau = std::max(1e-10, tol);

  const auto s0 = sym_of(bank.lowpass, sym_tau);
  rep.lowpass_symmetric = s0 && !s0->is_wildcard() && s0->epsilon == 1;
  const Rational c0 = rep.lowpass_symmetric ? Rational::make(s0->center2, d - 1) : Rational{};

  if (bank.dual_lowpass) rep.biorthogonal_residual = verify_biorthogonal(bank.lowpass, *bank.dual_lowpass, d);
  if (bank.highpass.empty() && bank.dual_lowpass) return rep;

  const PolyMatrix P = polyphase_matrix(bank);
  rep.uep_residual = max_abs_diff(P.adjoint() * P, PolyMatrix::identity(d));

  const int base_len = support_length(bank.lowpass);
  rep.support_ok = true;
  rep.system_vm = -1;
  for (const auto& hp : bank.highpass) {
    const int vm = zero_order_at_one(hp.poly, vm_tau);
    rep.vm_orders.push_back(vm);
    rep.system_vm = rep.system_vm < 0 ? vm : std::min(rep.system_vm, vm);

    bool ok = false;
    if (rep.lowpass_symmetric && hp.center.den > 0 && (hp.epsilon == 1 || hp.epsilon == -1)) {
      const auto C = symmetry_exponent(hp.center, c0, d);
      const auto s = sym_of(hp.poly, sym_tau);
      ok = C && s && !s->is_wildcard() && s->epsilon == hp.epsilon && s->center2 == *C;
    }
    rep.symmetry_ok.push_back(ok);

    const bool sup = support_length(hp.poly) <= base_len;
    rep.support_ok_each.push_back(sup);
    rep.support_ok = rep.support_ok && sup;
  }
  if (rep.system_vm < 0) rep.system_vm = 0;
  rep.orthogonal = bank.L() == d - 1 && rep.uep_residual <= tol;
  rep.vm_ok = bank.n <= 0 || rep.system_vm >= 2 * bank.n - 1;
  return rep;
}

std::vector<WaveletSymmetry> wavelet_symmetry(const FilterBank& bank) {
  std::vector<WaveletSymmetry> out;
  out.reserve(bank.highpass.size());
  for (const auto& hp : bank.highpass) out.push_back({hp.epsilon, hp.center});
  return out;
}

double verify_biorthogonal(const LaurentPoly& a, const LaurentPoly& a_dual, int d) {
  if (d < 2) throw InvalidArgument("verify_biorthogonal: d must be at least 2");
  const LaurentPoly t = a * star(a_dual);
  double worst = std::abs(static_cast<double>(d) * t[0] - 1.0);
  if (t.is_zero()) return worst;
  for (int k = t.low(); k <= t.high(); ++k) {
    if (k == 0 || k % d != 0) continue;
    worst = std::max(worst, std::abs(static_cast<double>(d) * t[k]));
  }
  return worst;
}

}  // namespace framelet
