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

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace framelet {

using Complex = std::complex<double>;

/// Relative threshold below which end coefficients are dropped after every
/// arithmetic operation.
inline constexpr double kTrimTol = 1e-12;

/// Default relative tolerance for deciding symmetry of a Laurent polynomial.
inline constexpr double kSymTol = 1e-9;

/// Integer interval [low, high] of exponents carrying nonzero coefficients.
struct Support {
  int low = 0;
  int high = 0;

  int length() const { return high - low; }
  bool operator==(const Support&) const = default;
};

/// Finitely supported complex sequence p(z) = sum_k p_k z^k, k in Z.
///
/// Storage is dense: coeffs()[i] is the coefficient of z^(offset() + i).
/// The first and last stored coefficients are nonzero, or the polynomial is
/// the canonical zero (no coefficients, offset 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int offset, std::vector<Complex> coeffs);
  LaurentPoly(int offset, std::initializer_list<Complex> coeffs);

  static LaurentPoly constant(Complex c);
  static LaurentPoly monomial(int exponent, Complex c = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  int offset() const { return offset_; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Coefficient of z^k (zero outside the stored range).
  Complex operator[](int k) const;

  /// Coefficient support; std::nullopt for the zero polynomial.
  std::optional<Support> support() const;
  int low() const { return offset_; }
  int high() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }

  double max_abs() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(Complex s);
  LaurentPoly& operator/=(Complex s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
  friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator/(LaurentPoly a, Complex s) { return a /= s; }
  LaurentPoly operator-() const;

  /// z^k p(z).
  LaurentPoly shifted(int k) const;
  /// p(1/z).
  LaurentPoly reflected() const;
  /// p(z^d).
  LaurentPoly upsampled(int d) const;
  /// Drops end coefficients with magnitude <= abs_tol.
  LaurentPoly trimmed_abs(double abs_tol) const;
  /// Sets every coefficient with magnitude <= abs_tol to exactly zero and
  /// trims, so interior noise is removed as well as end noise.
  LaurentPoly chopped_abs(double abs_tol) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void trim(double abs_tol);
  void trim_relative() { trim(kTrimTol * max_abs()); }

  int offset_ = 0;
  std::vector<Complex> coeffs_;
};

/// p^*(z) = sum conj(p_k) z^(-k).
LaurentPoly star(const LaurentPoly& p);

/// p(z) p^*(z); real and symmetric about 0.
LaurentPoly mod_square(const LaurentPoly& p);

/// p(e^{-i xi}).
Complex eval(const LaurentPoly& p, double xi);

/// p(z) for arbitrary nonzero complex z.
Complex eval_at(const LaurentPoly& p, Complex z);

/// Max coefficient magnitude of p - q.
double max_abs_diff(const LaurentPoly& p, const LaurentPoly& q);

/// Symmetry pattern Sym p = epsilon z^center2, i.e. p_{center2-k} = epsilon p_k.
struct SymmetrySpec {
  enum class Kind { exact, wildcard };

  int epsilon = 1;
  int center2 = 0;
  Kind kind = Kind::exact;

  static SymmetrySpec wildcard() { return {1, 0, Kind::wildcard}; }
  bool is_wildcard() const { return kind == Kind::wildcard; }
  bool operator==(const SymmetrySpec&) const = default;
};

/// Detects the symmetry of p. Returns a wildcard for the zero polynomial and
/// std::nullopt when p has no symmetry within tau * max|p_k|.
std::optional<SymmetrySpec> sym_of(const LaurentPoly& p, double tau = kSymTol);

/// Order of the zero of xi -> p(e^{-i xi}) at xi = 0, decided from the
/// centred moments sum_j (j - mid)^s p_j. A moment counts as zero when it is
/// at most tau times sum_j |j - mid|^s |p_j|. Throws InvalidArgument for p = 0.
int zero_order_at_one(const LaurentPoly& p, double tau = 1e-10);

}  // namespace framelet
