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

namespace framelet {

/// Row vector of Laurent polynomials with per-entry symmetry.
struct PolyVector {
  std::vector<LaurentPoly> entries;
  std::vector<SymmetrySpec> syms;

  std::size_t size() const { return entries.size(); }
};

/// Max coefficient magnitude of sum_i p_i p_i^* - 1.
double unit_residual(const std::vector<LaurentPoly>& p);

/// Dense matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);

  static PolyMatrix identity(int n);
  /// Constant matrix from row-major complex entries.
  static PolyMatrix constant(int rows, int cols, const std::vector<Complex>& entries);
  static PolyMatrix diagonal(const std::vector<LaurentPoly>& diag);
  /// Single row matrix.
  static PolyMatrix row(const std::vector<LaurentPoly>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentPoly& operator()(int i, int j) { return entries_[index(i, j)]; }
  const LaurentPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }

  std::vector<LaurentPoly> row_entries(int i) const;

  /// Star-transpose: (M^*)_{ij} = (M_{ji})^*.
  PolyMatrix adjoint() const;

  /// Smallest and largest exponent over all nonzero entries; [0, 0] if zero.
  Support support() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Max coefficient magnitude over entries of a - b.
double max_abs_diff(const PolyMatrix& a, const PolyMatrix& b);

/// Max coefficient magnitude of M M^* - I.
double paraunitary_residual(const PolyMatrix& m);

/// Row vector times matrix.
std::vector<LaurentPoly> row_times(const std::vector<LaurentPoly>& v, const PolyMatrix& m);

/// diag(a, b).
PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

/// True when Sym M_{ij} = (Sym theta1_i)^* Sym theta2_j for every nonzero
/// entry, i.e. entry (i, j) has symmetry eps1_i eps2_j z^(c2_j - c1_i).
bool symmetry_compatible(const PolyMatrix& m, const std::vector<SymmetrySpec>& theta1,
                         const std::vector<SymmetrySpec>& theta2, double tau = kSymTol);

}  // namespace framelet
