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

// Acceptance run: one PASS/FAIL line with timing per criterion. Exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "framelet/cascade.hpp"
#include "framelet/extension.hpp"
#include "framelet/filter_bank.hpp"
#include "framelet/poly_matrix.hpp"
#include "framelet/pseudospline.hpp"
#include "framelet/reference_banks.hpp"
#include "oracle.hpp"

using namespace framelet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool run_criterion(int k, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) o.check(secs < budget_s, "runtime " + fmt("%.3f", secs) + " s over budget " + fmt("%.1f", budget_s) + " s");
  std::printf("Criterion %d: %s (%s; %.3f s)\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  for (const auto& f : o.failures) std::printf("  - %s\n", f.c_str());
  std::fflush(stdout);
  return o.pass;
}

bool same_double(double got, double want) { return std::abs(got - want) <= 2 * std::numeric_limits<double>::epsilon() * std::abs(want); }

void criterion1(Outcome& o) {
  const FilterBank bank = construct({2, 4, 2});
  const double diff = max_abs_diff(bank.lowpass, reference_d2_m4_n2().lowpass);
  o.check(diff <= 1e-12, "low-pass deviation " + fmt("%.3e", diff));
  o.check(bank.lowpass.low() == -3 && bank.lowpass.high() == 3, "coefficient support is not [-3, 3]");
  o.detail = "max deviation " + fmt("%.2e", diff) + ", cs [" + std::to_string(bank.lowpass.low()) + ", " + std::to_string(bank.lowpass.high()) + "]";
}

void criterion2(Outcome& o) {
  const double d4 = max_abs_diff(construct({3, 4, 2}).lowpass, reference_d3_m4_n2().lowpass);
  const double d5 = max_abs_diff(construct({3, 5, 2}).lowpass, reference_d3_m5_n2().lowpass);
  o.check(d4 <= 1e-12, "(3,4,2) low-pass deviation " + fmt("%.3e", d4));
  o.check(d5 <= 1e-12, "(3,5,2) low-pass deviation " + fmt("%.3e", d5));
  const RealPoly p4 = poly_P(3, 4, 3), p5 = poly_P(3, 5, 3);
  const bool ok4 = p4.size() == 3 && p4[0] == 1.0 && same_double(p4[1], 32.0 / 3) && same_double(p4[2], 64.0);
  const bool ok5 = p5.size() == 3 && p5[0] == 1.0 && same_double(p5[1], 40.0 / 3) && same_double(p5[2], 880.0 / 9);
  o.check(ok4, "P for m=4 is not 1, 32/3, 64");
  o.check(ok5, "P for m=5 is not 1, 40/3, 880/9");
  o.detail = "deviations " + fmt("%.2e", d4) + ", " + fmt("%.2e", d5) + "; P coefficients " + (ok4 && ok5 ? "match" : "differ");
}

void criterion3(Outcome& o) {
  const VerificationReport r1 = verify(reference_d2_m4_n2(), 1e-10);
  const VerificationReport r2 = verify(reference_d3_m4_n2(), 1e-10);
  const VerificationReport r3 = verify(reference_d3_m5_n2(), 5e-4);
  const FilterBank dual = reference_d3_m4_n2_dual();
  const double bi = verify_biorthogonal(dual.lowpass, *dual.dual_lowpass, dual.d);
  o.check(r1.passed(), "ref-d2-m4-n2 fails verify, residual " + fmt("%.3e", r1.uep_residual));
  o.check(r2.passed(), "ref-d3-m4-n2 fails verify, residual " + fmt("%.3e", r2.uep_residual));
  o.check(r3.passed(),
          "ref-d3-m5-n2 (rounded listing): residual " + fmt("%.3e", r3.uep_residual) +
              " > 5e-4; the listed coefficients do not satisfy the extension identities to that accuracy and the"
              " antisymmetric filters have a single vanishing moment (known data defect)");
  o.check(bi <= 1e-9, "ref-d3-m4-n2-dual biorthogonal residual " + fmt("%.3e", bi));
  o.detail = "residuals d2-m4 " + fmt("%.2e", r1.uep_residual) + ", d3-m4 " + fmt("%.2e", r2.uep_residual) + ", d3-m5 " +
             fmt("%.2e", r3.uep_residual) + ", dual pair biorthogonal " + fmt("%.2e", bi);
}

void criterion4(Outcome& o) {
  int count = 0;
  double worst = 0.0;
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; 2 * n - 1 <= m; ++n) {
        const std::string tag = "(" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
        const FilterBank bank = construct({d, m, n});
        const VerificationReport rep = verify(bank, 1e-9);
        worst = std::max(worst, rep.uep_residual);
        o.check(rep.uep_residual <= 1e-9, tag + " residual " + fmt("%.3e", rep.uep_residual));
        o.check(rep.system_vm >= 2 * n - 1, tag + " system vanishing moments " + std::to_string(rep.system_vm));
        o.check(rep.support_ok, tag + " high-pass support exceeds low-pass support");
        o.check(rep.lowpass_symmetric, tag + " low-pass symmetry");
        o.check(std::all_of(rep.symmetry_ok.begin(), rep.symmetry_ok.end(), [](bool b) { return b; }),
                tag + " high-pass symmetry metadata");
        const bool L_ok = m == 2 * n - 1 ? bank.L() == d - 1 : m == 2 * n ? bank.L() == d : bank.L() >= d && bank.L() <= d + 1;
        o.check(L_ok, tag + " L=" + std::to_string(bank.L()));
        ++count;
      }
  o.detail = std::to_string(count) + " banks, worst residual " + fmt("%.2e", worst);
}

void criterion5(Outcome& o) {
  std::mt19937 rng(500);
  double worst_pu = 0.0, worst_row = 0.0;
  int maxJ = 0;
  for (int t = 0; t < 500; ++t) {
    const auto v = oracle::random_symmetric_unit_vector(rng);
    const PolyVector p{v.entries, v.syms};
    const Extension ext = extend(p);
    const double pu = paraunitary_residual(ext.Pe);
    double row = 0.0;
    for (std::size_t j = 0; j < p.entries.size(); ++j)
      row = std::max(row, max_abs_diff(ext.Pe(0, static_cast<int>(j)), p.entries[j]));
    worst_pu = std::max(worst_pu, pu);
    worst_row = std::max(worst_row, row);
    maxJ = std::max(maxJ, ext.trace.J);
    const std::string tag = "vector " + std::to_string(t);
    o.check(pu <= 1e-9, tag + " paraunitary residual " + fmt("%.3e", pu));
    o.check(row <= 1e-9, tag + " first-row deviation " + fmt("%.3e", row));
    o.check(ext.trace.J <= reduction_bound(p.entries), tag + " J over bound");
  }
  o.detail = "500 vectors, paraunitary " + fmt("%.2e", worst_pu) + ", first row " + fmt("%.2e", worst_row) + ", max J " +
             std::to_string(maxJ);
}

double horner(const RealPoly& p, double y) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + *it;
  return acc;
}

void criterion6(Outcome& o) {
  int cases = 0;
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 10; ++m)
      for (int n = 1; n <= m; ++n) {
        const RealPoly P = poly_P(d, m, n);
        double lo = 1e300;
        for (int i = 0; i <= 20000; ++i) lo = std::min(lo, horner(P, -50.0 + i * 0.005));
        o.check(n % 2 == 1 ? lo > 0.0 : lo < 0.0, "positivity parity fails for (" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
        ++cases;
      }

  std::mt19937 rng(6);
  std::uniform_real_distribution<double> ud(-3.0, 3.0);
  double worst_id = 0.0;
  for (int d = 2; d <= 4; ++d)
    for (int m = 2; m <= 8; ++m)
      for (int n = 1; n <= m; ++n)
        for (int s = 0; s < 5;) {
          const double y = ud(rng);
          bool near_pole = false;
          for (int l = 1; l < d; ++l) near_pole = near_pole || std::abs(y - std::pow(std::sin(l * std::numbers::pi / d), 2)) < 1e-2;
          if (near_pole) continue;
          const DerivativeIdentity r = derivative_identity(d, m, n, y);
          const double res = std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.lhs));
          worst_id = std::max(worst_id, res);
          ++s;
        }
  o.check(worst_id <= 1e-9, "derivative identity residual " + fmt("%.3e", worst_id));

  for (int d = 2; d <= 5; ++d)
    for (int m = 2; m <= 12; ++m)
      for (int j = 1; j < m - 1; ++j)
        o.check(2 * c_coeff(d, m, j - 1) < c_coeff(d, m, j), "coefficient monotonicity fails at d=" + std::to_string(d) + " m=" + std::to_string(m) + " j=" + std::to_string(j));

  double worst_root = 0.0;
  for (int d = 2; d <= 4; ++d)
    for (int m = 2; m <= 10; ++m)
      for (int n = 1; n < m; ++n) worst_root = std::max(worst_root, linear_independence_certificate(d, m, n).max_root_modulus);
  o.check(worst_root < 1.0, "certificate root modulus " + fmt("%.3f", worst_root));
  o.detail = std::to_string(cases) + " positivity cases, identity residual " + fmt("%.2e", worst_id) + ", max root modulus " +
             fmt("%.3f", worst_root);
}

void criterion7(Outcome& o) {
  double worst = 0.0;
  int count = 0;
  const std::vector<std::pair<std::string, FilterBank>> banks{
      {"ref-d2-m4-n2", reference_d2_m4_n2()}, {"ref-d3-m4-n2", reference_d3_m4_n2()}, {"ref-d3-m5-n2", reference_d3_m5_n2()}};
  for (const auto& [name, bank] : banks) {
    const CascadeResult cr = cascade(bank, 9);
    const Rational c0 = symbol_center(bank.lowpass, bank.d);
    const double dphi = symmetry_defect(cr.refinement.phi, c0, 1);
    o.check(dphi <= 1e-6, name + " phi symmetry defect " + fmt("%.3e", dphi));
    worst = std::max(worst, dphi);
    for (std::size_t l = 0; l < cr.psi.size(); ++l) {
      const auto& hp = bank.highpass[l];
      const double def = symmetry_defect(cr.psi[l], hp.center, hp.epsilon);
      o.check(def <= 1e-6, name + " psi" + std::to_string(l + 1) + " symmetry defect " + fmt("%.3e", def));
      worst = std::max(worst, def);
      ++count;
    }
  }
  o.detail = std::to_string(count) + " wavelets at 9 levels, worst defect " + fmt("%.2e", worst);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, 0.1, criterion1);
  ok &= run_criterion(2, 0.0, criterion2);
  ok &= run_criterion(3, 0.0, criterion3);
  ok &= run_criterion(4, 30.0, criterion4);
  ok &= run_criterion(5, 60.0, criterion5);
  ok &= run_criterion(6, 10.0, criterion6);
  ok &= run_criterion(7, 20.0, criterion7);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
