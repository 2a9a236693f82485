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

#include <vector>

#include "framelet/laurent.hpp"
#include "framelet/poly_matrix.hpp"
#include "framelet/pseudospline.hpp"
#include "framelet/rational.hpp"

namespace framelet {

/// a_{;gamma}(z) = sqrt(d) sum_k a(gamma + d k) z^k, gamma = 0..d-1.
std::vector<LaurentPoly> subsymbols(const LaurentPoly& a, int d);

/// a(z) = d^(-1/2) sum_gamma subs[gamma](z^d) z^gamma.
LaurentPoly assemble_symbol(const std::vector<LaurentPoly>& subs, int d);

struct RQ {
  int R = 0;
  int Q = 0;
  bool operator==(const RQ&) const = default;
};

/// (d-1) c0 - gamma = d R + Q with 0 <= Q < d. Throws InvalidArgument when
/// (d-1) c0 is not an integer.
RQ rq_split(int d, Rational c0, int gamma);

/// Symmetry centre of the pseudo-spline low-pass filter, eps/(d-1), so that
/// a_0(z) = z^((d-1) c0) a_0(1/z).
Rational lowpass_center(const PseudoSplineParams& params);

struct SymmetrizationPlan {
  enum class Role { fixed, plus, minus };
  struct Entry {
    int R = 0;
    int Q = 0;
    int kappa = 0;
    Role role = Role::fixed;
  };

  int d = 2;
  Rational c0;
  std::vector<Entry> entries;
};

/// Computes R, Q and the support-minimising kappa for every coset.
SymmetrizationPlan plan_symmetrization(const std::vector<LaurentPoly>& subs, int d, Rational c0);

struct Symmetrized {
  PolyVector p;  ///< subs * U, every entry with exact (or wildcard) symmetry
  PolyMatrix U;  ///< d x d paraunitary
};

/// Combines paired cosets into symmetric / antisymmetric entries. Throws
/// PreconditionError when subs[gamma] != z^R subs[Q](1/z).
Symmetrized symmetrize(const std::vector<LaurentPoly>& subs, const SymmetrizationPlan& plan);

struct UnitVector {
  std::vector<LaurentPoly> original;  ///< subsymbols of a_0 followed by appended entries
  PolyVector p;                       ///< original * U
  PolyMatrix U;
  int L = 0;                          ///< number of high-pass filters
};

/// The symmetric unit row vector fed to the matrix extension.
UnitVector build_unit_vector(const PseudoSplineParams& params);

/// Same construction from an arbitrary symmetric low-pass symbol with
/// centre c0 and deficit-free or factorable UEP remainder.
UnitVector build_unit_vector(const LaurentPoly& a0, int d, Rational c0, const LaurentPoly* appended_hint = nullptr);

}  // namespace framelet
