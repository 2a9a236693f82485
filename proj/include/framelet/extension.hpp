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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "framelet/laurent.hpp"
#include "framelet/poly_matrix.hpp"

namespace framelet {

/// Sizes (n1, n2, n3, n4) of the symmetry classes 1, -1, z^-1, -z^-1 of a
/// vector in normal form.
using ClassCounts = std::array<int, 4>;

/// Constant unitary U_f with f U_f = [|f|, 0, ..., 0]; its first column is
/// f^* / |f|. Identity for f = 0, empty for empty f.
PolyMatrix householder_unitary(std::span<const Complex> f);

struct Normalizer {
  PolyMatrix U;         ///< diag(z^(-ceil(c_i/2))) followed by a stable class sort
  ClassCounts counts{};
  std::vector<SymmetrySpec> resolved;  ///< input symmetries with wildcards fixed to (+1, 0)
};

/// Brings a symmetry pattern to the normal form [1.., -1.., z^-1.., -z^-1..].
Normalizer symmetry_normalizer(const std::vector<SymmetrySpec>& syms);

struct CanonicalForm {
  std::vector<LaurentPoly> q0;  ///< q U_q
  PolyMatrix Uq;
  ClassCounts layout{};  ///< block sizes of q0 in the order (f1, f2, g1, g2)
};

/// Rewrites a normal-form unit vector so that its outermost coefficients
/// are carried by the first two blocks. Throws PreconditionError when q is
/// constant or the pattern matches neither layout.
CanonicalForm canonical_form(const std::vector<LaurentPoly>& q, const ClassCounts& counts);

/// Paraunitary B with cs(B) in [-1, 1] and cs(q0 B) = [l1+1, l2-1] for a
/// vector q0 in canonical layout with block sizes `layout`.
PolyMatrix support_reducer(const std::vector<LaurentPoly>& q0, const ClassCounts& layout);

struct OddStep {
  PolyMatrix A;
  ClassCounts counts{};
};

/// Final step for |cs(q)| = 1: q A is constant and the counts move by
/// (+1, +1, -1, -1).
OddStep odd_step(const std::vector<LaurentPoly>& q, const ClassCounts& counts);

struct ExtensionTrace {
  enum class Kind { init, reduce, odd, finalize };
  struct Step {
    Kind kind;
    PolyMatrix factor;
  };

  std::vector<Step> steps;  ///< P_0, P_1, ..., P_{J+1}
  int J = 0;

  /// P_{J+1} ... P_1 P_0.
  PolyMatrix replay() const;
};

std::string to_string(ExtensionTrace::Kind kind);
ExtensionTrace::Kind kind_from_string(const std::string& s);

struct Extension {
  PolyMatrix Pe;
  ExtensionTrace trace;
  std::vector<SymmetrySpec> col_syms;  ///< Sym p with wildcards resolved
  std::vector<SymmetrySpec> row_syms;  ///< (eps_l, k_l): Sym Pe = [row_syms]^T Sym p
};

/// Paraunitary completion with compatible symmetry of a unit row vector
/// whose entries have symmetry. Throws PreconditionError when p p^* != 1 and
/// NumericalBreakdown when support reduction stalls.
Extension extend(const PolyVector& p);

/// max_i ceil(|cs(p_i)| / 2), the bound on the number of reduction steps.
int reduction_bound(const std::vector<LaurentPoly>& p);

}  // namespace framelet
