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

#include "framelet/filter_bank.hpp"
#include "framelet/laurent.hpp"
#include "framelet/rational.hpp"

namespace framelet {

inline constexpr int kMaxLevels = 12;
inline constexpr long kMaxGrid = 1L << 24;

/// Samples f((first + i) / scale), i = 0..values.size()-1.
struct SampledFunction {
  long first = 0;
  long scale = 1;
  std::vector<Complex> values;

  Rational start() const { return Rational::make(first, scale); }
  Rational step() const { return Rational::make(1, scale); }
  double t(std::size_t i) const { return static_cast<double>(first + static_cast<long>(i)) / static_cast<double>(scale); }
  /// Value at grid index first + i, zero outside the stored range.
  Complex at(long grid_index) const;
  long last() const { return first + static_cast<long>(values.size()) - 1; }
};

struct Refinement {
  SampledFunction phi;
  std::vector<double> sup_diff;  ///< sup |v_{k+1} - v_k| on common points, k = 0..levels-1
  bool diverging = false;        ///< sup_diff grew three times in a row
};

/// Cascade iteration phi_{k+1} = d sum_j a(j) phi_k(d . - j) from the hat
/// function of width 1 centred at the symmetry centre of a (0 when a has no
/// symmetry). Samples are the exact knot values of phi_K on the grid
/// (D d^K)^-1 Z, where D = 1 when a(-k) = a(k) and otherwise the least D
/// that puts the centre on (1/D) Z. Throws InvalidArgument when levels is
/// outside [0, 12] or d^levels exceeds 2^24, PreconditionError when a(1) != 1.
Refinement refine(const LaurentPoly& a, int d, int levels);

/// psi(t) = d sum_j a_l(j) phi(d t - j) on the grid of phi.
SampledFunction wavelet_samples(const LaurentPoly& a_l, const SampledFunction& phi, int d);

/// max |f(c - t) - eps f(t)| over grid points t whose mirror is also a grid
/// point. Mirrors between grid points are linearly interpolated.
double symmetry_defect(const SampledFunction& f, Rational c, int epsilon);

struct CascadeResult {
  Refinement refinement;
  std::vector<SampledFunction> psi;
};

CascadeResult cascade(const FilterBank& bank, int levels);

/// One sampled psi^l per high-pass filter of the bank.
std::vector<SampledFunction> wavelet_samples(const FilterBank& bank, int levels);

}  // namespace framelet
