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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framelet/extension.hpp"
#include "framelet/laurent.hpp"
#include "framelet/poly_matrix.hpp"
#include "framelet/pseudospline.hpp"
#include "framelet/rational.hpp"

namespace framelet {

inline constexpr double kVerifyTol = 1e-9;
inline constexpr char kGeneratorVersion[] = "framelet 1.0.0";

/// High-pass symbol with a_l(z) = eps z^(d c - c0) a_l(1/z), i.e.
/// psi^l(c - .) = eps psi^l.
struct HighPass {
  LaurentPoly poly;
  int epsilon = 1;
  Rational center;
};

struct FilterBank {
  int d = 2;
  int m = 0;  ///< 0 when unknown (e.g. hand-entered data)
  int n = 0;
  LaurentPoly lowpass;
  std::vector<HighPass> highpass;
  /// Optional dual low-pass filter; a bank with a dual and no high-pass
  /// filters describes a biorthogonal pair.
  std::optional<LaurentPoly> dual_lowpass;
  std::string generator = kGeneratorVersion;
  std::optional<ExtensionTrace> trace;

  int L() const { return static_cast<int>(highpass.size()); }
};

/// Runs the whole pipeline: low-pass, symmetric unit vector, extension and
/// high-pass assembly from the first d columns of P_e U^*.
FilterBank construct(const PseudoSplineParams& params);

/// (L+1) x d polyphase matrix of the bank.
PolyMatrix polyphase_matrix(const FilterBank& bank);

struct VerificationReport {
  double uep_residual = 0.0;
  std::vector<int> vm_orders;
  int system_vm = 0;
  bool lowpass_symmetric = false;
  std::vector<bool> symmetry_ok;
  std::vector<bool> support_ok_each;
  bool support_ok = false;
  bool orthogonal = false;
  bool vm_ok = true;  ///< system_vm >= 2n-1 when n is known
  std::optional<double> biorthogonal_residual;
  double tol = kVerifyTol;

  bool passed() const;
};

/// UEP residual, vanishing moments, symmetry and support checks. Never
/// throws on a failed check; the report carries the outcome.
VerificationReport verify(const FilterBank& bank, double tol = kVerifyTol);

struct WaveletSymmetry {
  int epsilon = 1;
  Rational center;
};

/// psi^l(c_l - .) = eps_l psi^l for every generator, read from the filters.
std::vector<WaveletSymmetry> wavelet_symmetry(const FilterBank& bank);

/// Max deviation of sum_j a(xi + 2 pi j/d) conj(a_dual(xi + 2 pi j/d)) from 1,
/// measured coefficient-wise.
double verify_biorthogonal(const LaurentPoly& a, const LaurentPoly& a_dual, int d);

/// Symmetry centre of a low-pass symbol as a rational, from Sym a = z^e:
/// c0 = e / (d - 1). Throws InvalidArgument when a is not symmetric.
Rational symbol_center(const LaurentPoly& a, int d);

}  // namespace framelet
