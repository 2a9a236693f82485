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

#include "framelet/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "framelet/errors.hpp"

namespace framelet {

LaurentPoly::LaurentPoly(int offset, std::vector<Complex> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  trim_relative();
}

LaurentPoly::LaurentPoly(int offset, std::initializer_list<Complex> coeffs)
    : LaurentPoly(offset, std::vector<Complex>(coeffs)) {}

LaurentPoly LaurentPoly::constant(Complex c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(int exponent, Complex c) { return LaurentPoly(exponent, {c}); }

Complex LaurentPoly::operator[](int k) const {
  const int i = k - offset_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<Support> LaurentPoly::support() const {
  if (is_zero()) return std::nullopt;
  return Support{low(), high()};
}

double LaurentPoly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void LaurentPoly::trim(double abs_tol) {
  std::size_t first = 0;
  std::size_t last = coeffs_.size();
  while (first < last && std::abs(coeffs_[first]) <= abs_tol) ++first;
  while (last > first && std::abs(coeffs_[last - 1]) <= abs_tol) --last;
  if (first == last) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Complex>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    offset_ += static_cast<int>(first);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low(), rhs.low());
  const int hi = std::max(high(), rhs.high());
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int k = low(); k <= high(); ++k) out[static_cast<std::size_t>(k - lo)] += (*this)[k];
  for (int k = rhs.low(); k <= rhs.high(); ++k) out[static_cast<std::size_t>(k - lo)] += rhs[k];
  offset_ = lo;
  coeffs_ = std::move(out);
  trim_relative();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.offset_ + b.offset_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  trim_relative();
  return *this;
}

LaurentPoly& LaurentPoly::operator/=(Complex s) {
  for (auto& c : coeffs_) c /= s;
  trim_relative();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  LaurentPoly out = *this;
  out.offset_ += k;
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  std::vector<Complex> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(rev));
}

LaurentPoly LaurentPoly::upsampled(int d) const {
  if (is_zero()) return {};
  std::vector<Complex> out((coeffs_.size() - 1) * static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(d)] = coeffs_[i];
  return LaurentPoly(offset_ * d, std::move(out));
}

LaurentPoly LaurentPoly::trimmed_abs(double abs_tol) const {
  LaurentPoly out = *this;
  out.trim(abs_tol);
  return out;
}

LaurentPoly LaurentPoly::chopped_abs(double abs_tol) const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) {
    if (std::abs(c) <= abs_tol) c = 0.0;
  }
  out.trim(0.0);
  return out;
}

LaurentPoly star(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Complex> out;
  out.reserve(p.coeffs().size());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back(std::conj(*it));
  return LaurentPoly(-p.high(), std::move(out));
}

LaurentPoly mod_square(const LaurentPoly& p) { return p * star(p); }

Complex eval_at(const LaurentPoly& p, Complex z) {
  if (p.is_zero()) return {};
  Complex acc{};
  const auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, p.low());
}

Complex eval(const LaurentPoly& p, double xi) {
  Complex acc{};
  for (int k = p.low(); !p.is_zero() && k <= p.high(); ++k) {
    acc += p[k] * std::polar(1.0, -static_cast<double>(k) * xi);
  }
  return acc;
}

double max_abs_diff(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) return 0.0;
  const int lo = p.is_zero() ? q.low() : (q.is_zero() ? p.low() : std::min(p.low(), q.low()));
  const int hi = p.is_zero() ? q.high() : (q.is_zero() ? p.high() : std::max(p.high(), q.high()));
  double m = 0.0;
  for (int k = lo; k <= hi; ++k) m = std::max(m, std::abs(p[k] - q[k]));
  return m;
}

std::optional<SymmetrySpec> sym_of(const LaurentPoly& p, double tau) {
  if (p.is_zero()) return SymmetrySpec::wildcard();
  const int c = p.low() + p.high();
  const double scale = tau * p.max_abs();
  for (int eps : {1, -1}) {
    bool ok = true;
    for (int k = p.low(); k <= p.high() && ok; ++k) {
      ok = std::abs(p[c - k] - static_cast<double>(eps) * p[k]) <= scale;
    }
    if (ok) return SymmetrySpec{eps, c, SymmetrySpec::Kind::exact};
  }
  return std::nullopt;
}

int zero_order_at_one(const LaurentPoly& p, double tau) {
  if (p.is_zero()) throw InvalidArgument("zero_order_at_one: order of the zero polynomial is undefined");
  const double mid = 0.5 * (p.low() + p.high());
  const int n = static_cast<int>(p.coeffs().size());
  // A nonzero polynomial with n coefficients has a zero of order at most n-1.
  for (int s = 0; s < n; ++s) {
    Complex moment{};
    double scale = 0.0;
    for (int k = p.low(); k <= p.high(); ++k) {
      const double w = std::pow(static_cast<double>(k) - mid, s);
      moment += w * p[k];
      scale += std::abs(w) * std::abs(p[k]);
    }
    if (std::abs(moment) > tau * scale) return s;
  }
  return n - 1;
}

}  // namespace framelet
