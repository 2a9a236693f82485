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

#include "framelet/poly_matrix.hpp"

#include <algorithm>

#include "framelet/errors.hpp"

namespace framelet {

double unit_residual(const std::vector<LaurentPoly>& p) {
  LaurentPoly acc = LaurentPoly::constant(-1.0);
  for (const auto& e : p) acc += mod_square(e);
  return acc.max_abs();
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw InvalidArgument("PolyMatrix: negative dimension");
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(1.0);
  return m;
}

PolyMatrix PolyMatrix::constant(int rows, int cols, const std::vector<Complex>& entries) {
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    throw InvalidArgument("PolyMatrix::constant: entry count mismatch");
  }
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Complex c = entries[static_cast<std::size_t>(i * cols + j)];
      if (c != Complex{}) m(i, j) = LaurentPoly::constant(c);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<LaurentPoly>& diag) {
  const int n = static_cast<int>(diag.size());
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

PolyMatrix PolyMatrix::row(const std::vector<LaurentPoly>& entries) {
  PolyMatrix m(1, static_cast<int>(entries.size()));
  for (int j = 0; j < m.cols(); ++j) m(0, j) = entries[static_cast<std::size_t>(j)];
  return m;
}

std::vector<LaurentPoly> PolyMatrix::row_entries(int i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
          entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + static_cast<std::size_t>(cols_))};
}

PolyMatrix PolyMatrix::adjoint() const {
  PolyMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = star((*this)(i, j));
  }
  return out;
}

Support PolyMatrix::support() const {
  std::optional<Support> s;
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    if (!s) {
      s = Support{e.low(), e.high()};
    } else {
      s->low = std::min(s->low, e.low());
      s->high = std::max(s->high, e.high());
    }
  }
  return s.value_or(Support{0, 0});
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("PolyMatrix product: dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("PolyMatrix difference: dimension mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

double max_abs_diff(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, max_abs_diff(a(i, j), b(i, j)));
  }
  return m;
}

double paraunitary_residual(const PolyMatrix& m) {
  return max_abs_diff(m * m.adjoint(), PolyMatrix::identity(m.rows()));
}

std::vector<LaurentPoly> row_times(const std::vector<LaurentPoly>& v, const PolyMatrix& m) {
  return (PolyMatrix::row(v) * m).row_entries(0);
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

bool symmetry_compatible(const PolyMatrix& m, const std::vector<SymmetrySpec>& theta1,
                         const std::vector<SymmetrySpec>& theta2, double tau) {
  if (theta1.size() != static_cast<std::size_t>(m.rows()) || theta2.size() != static_cast<std::size_t>(m.cols())) {
    return false;
  }
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      const SymmetrySpec& s1 = theta1[static_cast<std::size_t>(i)];
      const SymmetrySpec& s2 = theta2[static_cast<std::size_t>(j)];
      const int eps = s1.epsilon * s2.epsilon;
      const int c = s2.center2 - s1.center2;
      // Check e(z) = eps z^c e(1/z) directly so that the test is exact about
      // the required centre even for entries whose support is narrower.
      const LaurentPoly rhs = e.reflected().shifted(c) * static_cast<double>(eps);
      if (max_abs_diff(e, rhs) > tau * e.max_abs()) return false;
    }
  }
  return true;
}

}  // namespace framelet
