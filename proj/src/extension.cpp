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

#include "framelet/extension.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "framelet/errors.hpp"

namespace framelet {
namespace {

using Vec = std::vector<Complex>;

// Relative cutoff for deciding that a coefficient or block is zero.
constexpr double kZeroTol = 1e-10;
// Absolute cutoff applied to accumulated factor products.
constexpr double kMatrixChop = 1e-14;

constexpr std::array<SymmetrySpec, 4> kClassSym{
    SymmetrySpec{1, 0}, SymmetrySpec{-1, 0}, SymmetrySpec{1, -1}, SymmetrySpec{-1, -1}};

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }
int ceil_half(int c) { return -floor_div(-c, 2); }

std::array<int, 5> offsets(const ClassCounts& n) { return {0, n[0], n[0] + n[1], n[0] + n[1] + n[2], n[0] + n[1] + n[2] + n[3]}; }

std::optional<Support> vec_support(const std::vector<LaurentPoly>& q) {
  std::optional<Support> s;
  for (const auto& e : q) {
    if (e.is_zero()) continue;
    if (!s) {
      s = Support{e.low(), e.high()};
    } else {
      s->low = std::min(s->low, e.low());
      s->high = std::max(s->high, e.high());
    }
  }
  return s;
}

double vec_max(const std::vector<LaurentPoly>& q) {
  double m = 0.0;
  for (const auto& e : q) m = std::max(m, e.max_abs());
  return m;
}

Vec coeffs_at(const std::vector<LaurentPoly>& q, int k, int begin, int end) {
  Vec v;
  for (int i = begin; i < end; ++i) v.push_back(q[static_cast<std::size_t>(i)][k]);
  return v;
}

double norm(const Vec& v) {
  double s = 0.0;
  for (const Complex c : v) s += std::norm(c);
  return std::sqrt(s);
}

// Drops coefficients that are noise relative to the whole vector and
// restores the exact symmetry of each class.
std::vector<LaurentPoly> clean(const std::vector<LaurentPoly>& q, const ClassCounts& counts) {
  const double tol = kZeroTol * vec_max(q);
  const auto off = offsets(counts);
  std::vector<LaurentPoly> out;
  out.reserve(q.size());
  for (int cls = 0; cls < 4; ++cls) {
    const SymmetrySpec s = kClassSym[static_cast<std::size_t>(cls)];
    for (int i = off[static_cast<std::size_t>(cls)]; i < off[static_cast<std::size_t>(cls) + 1]; ++i) {
      const LaurentPoly& e = q[static_cast<std::size_t>(i)];
      const LaurentPoly mirrored = e.reflected().shifted(s.center2) * static_cast<double>(s.epsilon);
      out.push_back(((e + mirrored) / 2.0).chopped_abs(tol));
    }
  }
  return out;
}

PolyMatrix chop(const PolyMatrix& m) {
  PolyMatrix out = m;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).chopped_abs(kMatrixChop);
  }
  return out;
}

Eigen::MatrixXcd householder_matrix(const Vec& f) {
  const int n = static_cast<int>(f.size());
  const double fn = norm(f);
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  if (fn == 0.0) return Eigen::MatrixXcd::Identity(n, n);

  // E_f: stable permutation moving the nonzero entries to the front.
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    if (std::abs(f[static_cast<std::size_t>(i)]) > 1e-14 * fn) order.push_back(i);
  }
  const int nf = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    if (std::abs(f[static_cast<std::size_t>(i)]) <= 1e-14 * fn) order.push_back(i);
  }
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n, n);
  Eigen::RowVectorXcd fe(n);
  for (int j = 0; j < n; ++j) {
    E(order[static_cast<std::size_t>(j)], j) = 1.0;
    fe(j) = f[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
  }
  const Complex f1 = fe(0);
  const Complex phase = std::conj(f1) / std::abs(f1);
  Eigen::MatrixXcd V;
  if (nf == 1) {
    V = phase * Eigen::MatrixXcd::Identity(n, n);
  } else {
    Eigen::RowVectorXcd v = fe;
    v(0) -= f1 / std::abs(f1) * fn;
    V = phase * (Eigen::MatrixXcd::Identity(n, n) - 2.0 / v.squaredNorm() * v.adjoint() * v);
  }
  return E * V;
}

Vec column_conj(const Eigen::MatrixXcd& U, int col) {
  Vec v;
  for (Eigen::Index i = 0; i < U.rows(); ++i) v.push_back(std::conj(U(i, col)));
  return v;
}

LaurentPoly lp(int offset, std::initializer_list<Complex> c) { return LaurentPoly(offset, c); }

}  // namespace

PolyMatrix householder_unitary(std::span<const Complex> f) {
  const Eigen::MatrixXcd U = householder_matrix(Vec(f.begin(), f.end()));
  const int n = static_cast<int>(U.rows());
  std::vector<Complex> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(U(i, j));
  }
  return PolyMatrix::constant(n, n, entries);
}

Normalizer symmetry_normalizer(const std::vector<SymmetrySpec>& syms) {
  const int s = static_cast<int>(syms.size());
  Normalizer out;
  std::vector<int> cls(static_cast<std::size_t>(s));
  std::vector<int> shift(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    SymmetrySpec sp = syms[static_cast<std::size_t>(i)];
    if (sp.is_wildcard()) sp = SymmetrySpec{1, 0};
    out.resolved.push_back(sp);
    const int sh = -ceil_half(sp.center2);
    const int c = sp.center2 + 2 * sh;  // 0 or -1
    shift[static_cast<std::size_t>(i)] = sh;
    cls[static_cast<std::size_t>(i)] = (c == 0 ? 0 : 2) + (sp.epsilon == 1 ? 0 : 1);
    ++out.counts[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
  }
  std::vector<int> order(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cls[static_cast<std::size_t>(a)] < cls[static_cast<std::size_t>(b)];
  });
  out.U = PolyMatrix(s, s);
  for (int j = 0; j < s; ++j) {
    const int i = order[static_cast<std::size_t>(j)];
    out.U(i, j) = LaurentPoly::monomial(shift[static_cast<std::size_t>(i)]);
  }
  return out;
}

CanonicalForm canonical_form(const std::vector<LaurentPoly>& q, const ClassCounts& counts) {
  const auto sup = vec_support(q);
  if (!sup) throw PreconditionError("canonical_form: zero vector");
  const int s = static_cast<int>(q.size());
  const auto off = offsets(counts);
  CanonicalForm out;
  if (sup->low + sup->high == 0) {
    out.q0 = q;
    out.Uq = PolyMatrix::identity(s);
    out.layout = counts;
  } else if (sup->low + sup->high == -1) {
    // Blocks (z^-1 classes first, then the shifted symmetric classes).
    out.Uq = PolyMatrix(s, s);
    const std::array<int, 4> src{2, 3, 0, 1};
    int col = 0;
    for (const int cls : src) {
      const int shift = cls < 2 ? -1 : 0;
      for (int i = off[static_cast<std::size_t>(cls)]; i < off[static_cast<std::size_t>(cls) + 1]; ++i) {
        out.Uq(i, col++) = LaurentPoly::monomial(shift);
      }
    }
    out.layout = {counts[2], counts[3], counts[0], counts[1]};
    out.q0 = row_times(q, out.Uq);
  } else {
    throw PreconditionError("canonical_form: vector is not in symmetric normal form");
  }
  const auto lay = offsets(out.layout);
  const auto sup0 = vec_support(out.q0);
  const Vec f1 = coeffs_at(out.q0, sup0->high, lay[0], lay[1]);
  if (norm(f1) <= kZeroTol * vec_max(q)) throw PreconditionError("canonical_form: leading block vanishes");
  return out;
}

PolyMatrix support_reducer(const std::vector<LaurentPoly>& q0, const ClassCounts& layout) {
  const auto sup = vec_support(q0);
  if (!sup || sup->high - sup->low < 2) throw PreconditionError("support_reducer: need |cs(q)| >= 2");
  const int l1 = sup->low;
  const int l2 = sup->high;
  const int s = static_cast<int>(q0.size());
  const auto off = offsets(layout);
  const double tol = kZeroTol * vec_max(q0);

  const Vec top = coeffs_at(q0, l2, 0, s);
  const Vec second = coeffs_at(q0, l1 + 1, 0, s);
  const Vec f1 = coeffs_at(q0, l2, off[0], off[1]);
  const Vec f2 = coeffs_at(q0, l2, off[1], off[2]);
  const Vec g1 = coeffs_at(q0, l2 - 1, off[2], off[3]);
  const Vec g2 = coeffs_at(q0, l2 - 1, off[3], off[4]);
  const double cf1 = norm(f1);
  if (cf1 <= tol) throw PreconditionError("support_reducer: f1 = 0");
  const double cg1 = norm(g1);
  const double cg2 = norm(g2);
  const bool has_g1 = cg1 > tol;
  const bool has_g2 = cg2 > tol;
  Complex c0{};
  for (int i = 0; i < s; ++i) c0 += second[static_cast<std::size_t>(i)] * std::conj(top[static_cast<std::size_t>(i)]);
  c0 /= cf1;
  const double c = std::sqrt(4 * cf1 * cf1 + 2 * cg1 * cg1 + 2 * cg2 * cg2 + std::norm(c0));

  const Eigen::MatrixXcd Uf1 = householder_matrix(f1);
  const Eigen::MatrixXcd Uf2 = householder_matrix(f2);
  const Eigen::MatrixXcd Ug1 = householder_matrix(has_g1 ? g1 : Vec(g1.size()));
  const Eigen::MatrixXcd Ug2 = householder_matrix(has_g2 ? g2 : Vec(g2.size()));

  PolyMatrix bs(s, s);
  auto put_row = [&](int row, int block, const Vec& v, const LaurentPoly& factor) {
    for (int t = 0; t < off[static_cast<std::size_t>(block) + 1] - off[static_cast<std::size_t>(block)]; ++t) {
      bs(row, off[static_cast<std::size_t>(block)] + t) = factor * v[static_cast<std::size_t>(t)];
    }
  };
  // Remaining rows of each block: conjugate transpose of the trailing
  // columns of the block's Householder matrix.
  auto put_tail = [&](int block, const Eigen::MatrixXcd& U) {
    const int n = off[static_cast<std::size_t>(block) + 1] - off[static_cast<std::size_t>(block)];
    for (int r = 1; r < n; ++r) {
      const Vec row = column_conj(U, r);
      for (int t = 0; t < n; ++t) {
        const Complex v = row[static_cast<std::size_t>(t)];
        if (v != Complex{}) bs(off[static_cast<std::size_t>(block)] + r, off[static_cast<std::size_t>(block)] + t) = LaurentPoly::constant(v);
      }
    }
  };
  const Complex r0 = c0 / cf1;
  const double ic = 1.0 / c;

  if (layout[0] > 0) {
    const int row = off[0];
    put_row(row, 0, f1, lp(-1, {1.0, r0, 1.0}) * ic);
    put_row(row, 1, f2, lp(-1, {-1.0, 0.0, 1.0}) * ic);
    put_row(row, 2, g1, lp(-1, {1.0, 1.0}) * ic);
    put_row(row, 3, g2, lp(-1, {-1.0, 1.0}) * ic);
    put_tail(0, Uf1);
  }
  if (layout[1] > 0) {
    const int row = off[1];
    put_row(row, 0, f1, lp(-1, {-1.0, 0.0, 1.0}) * (-ic));
    put_row(row, 1, f2, lp(-1, {1.0, -r0, 1.0}) * (-ic));
    put_row(row, 2, g1, lp(-1, {-1.0, 1.0}) * (-ic));
    put_row(row, 3, g2, lp(-1, {1.0, 1.0}) * (-ic));
    put_tail(1, Uf2);
  }
  if (layout[2] > 0) {
    const int row = off[2];
    put_row(row, 0, f1, lp(0, {1.0, 1.0}) * (ic * cg1 / cf1));
    put_row(row, 1, f2, lp(0, {1.0, -1.0}) * (-ic * cg1 / cf1));
    if (has_g1) {
      put_row(row, 2, g1, LaurentPoly::constant(ic * (-2.0 * cf1 - std::conj(c0)) / cg1));
    } else {
      bs(row, off[2]) = LaurentPoly::constant(1.0);
    }
    put_tail(2, Ug1);
  }
  if (layout[3] > 0) {
    const int row = off[3];
    put_row(row, 0, f1, lp(0, {1.0, -1.0}) * (ic * cg2 / cf1));
    put_row(row, 1, f2, lp(0, {1.0, 1.0}) * (-ic * cg2 / cf1));
    if (has_g2) {
      put_row(row, 3, g2, LaurentPoly::constant(ic * (2.0 * cf1 - std::conj(c0)) / cg2));
    } else {
      bs(row, off[3]) = LaurentPoly::constant(1.0);
    }
    put_tail(3, Ug2);
  }
  return bs.adjoint();
}

OddStep odd_step(const std::vector<LaurentPoly>& q, const ClassCounts& counts) {
  const auto sup = vec_support(q);
  if (!sup || sup->low != -1 || sup->high != 0) throw PreconditionError("odd_step: need cs(q) = [-1, 0]");
  const int s = static_cast<int>(q.size());
  const auto off = offsets(counts);
  const double tol = kZeroTol * vec_max(q);
  if (counts[2] == 0 || counts[3] == 0) throw PreconditionError("odd_step: empty z^-1 classes");
  if (norm(coeffs_at(q, -1, off[0], off[2])) > tol || norm(coeffs_at(q, 0, off[1], off[2])) > tol) {
    throw PreconditionError("odd_step: symmetric classes must be constant");
  }
  const Vec g1 = coeffs_at(q, 0, off[2], off[3]);
  const Vec g2 = coeffs_at(q, 0, off[3], off[4]);
  const double cg1 = norm(g1);
  if (cg1 <= tol) throw PreconditionError("odd_step: g1 = 0");
  const Eigen::MatrixXcd Ug1 = householder_matrix(g1);
  const Eigen::MatrixXcd Ug2 = householder_matrix(g2);

  const int n1 = counts[0];
  const int n2 = counts[1];
  const int n3 = counts[2];
  const int n4 = counts[3];
  const int sym_col = n1;
  const int anti_col = n1 + 1 + n2;
  const int g1_cols = n1 + n2 + 2;
  const int g2_cols = g1_cols + n3 - 1;

  PolyMatrix A(s, s);
  for (int t = 0; t < n1; ++t) A(off[0] + t, t) = LaurentPoly::constant(1.0);
  for (int t = 0; t < n2; ++t) A(off[1] + t, n1 + 1 + t) = LaurentPoly::constant(1.0);
  const double k = 1.0 / (2.0 * cg1);
  for (int t = 0; t < n3; ++t) {
    const Complex gc = std::conj(g1[static_cast<std::size_t>(t)]);
    A(off[2] + t, sym_col) = lp(0, {1.0, 1.0}) * (gc * k);
    A(off[2] + t, anti_col) = lp(0, {1.0, -1.0}) * (gc * k);
    for (int r = 1; r < n3; ++r) {
      if (Ug1(t, r) != Complex{}) A(off[2] + t, g1_cols + r - 1) = LaurentPoly::constant(Ug1(t, r));
    }
  }
  for (int t = 0; t < n4; ++t) {
    const Complex gc = std::conj(g2[static_cast<std::size_t>(t)]);
    A(off[3] + t, sym_col) = lp(0, {1.0, -1.0}) * (gc * k);
    A(off[3] + t, anti_col) = lp(0, {1.0, 1.0}) * (gc * k);
    for (int r = 1; r < n4; ++r) {
      if (Ug2(t, r) != Complex{}) A(off[3] + t, g2_cols + r - 1) = LaurentPoly::constant(Ug2(t, r));
    }
  }
  return {A, {n1 + 1, n2 + 1, n3 - 1, n4 - 1}};
}

PolyMatrix ExtensionTrace::replay() const {
  if (steps.empty()) return {};
  PolyMatrix acc = steps.front().factor;
  for (std::size_t i = 1; i < steps.size(); ++i) acc = chop(steps[i].factor * acc);
  return acc;
}

std::string to_string(ExtensionTrace::Kind kind) {
  switch (kind) {
    case ExtensionTrace::Kind::init:
      return "init";
    case ExtensionTrace::Kind::reduce:
      return "reduce";
    case ExtensionTrace::Kind::odd:
      return "odd";
    case ExtensionTrace::Kind::finalize:
      return "finalize";
  }
  return "unknown";
}

ExtensionTrace::Kind kind_from_string(const std::string& s) {
  if (s == "init") return ExtensionTrace::Kind::init;
  if (s == "reduce") return ExtensionTrace::Kind::reduce;
  if (s == "odd") return ExtensionTrace::Kind::odd;
  if (s == "finalize") return ExtensionTrace::Kind::finalize;
  throw InvalidArgument("unknown trace step kind '" + s + "'");
}

int reduction_bound(const std::vector<LaurentPoly>& p) {
  int bound = 0;
  for (const auto& e : p) {
    if (!e.is_zero()) bound = std::max(bound, ceil_half(e.high() - e.low()));
  }
  return bound;
}

Extension extend(const PolyVector& p) {
  const int s = static_cast<int>(p.size());
  if (s == 0) throw PreconditionError("extend: empty vector");
  if (unit_residual(p.entries) > 1e-10) throw PreconditionError("extend: p p^* != 1");
  std::vector<SymmetrySpec> syms = p.syms;
  if (syms.size() != p.entries.size()) {
    syms.clear();
    for (const auto& e : p.entries) {
      const auto sp = sym_of(e);
      if (!sp) throw PreconditionError("extend: entry without symmetry");
      syms.push_back(*sp);
    }
  }

  Extension out;
  const Normalizer norm0 = symmetry_normalizer(syms);
  out.col_syms = norm0.resolved;
  out.trace.steps.push_back({ExtensionTrace::Kind::init, norm0.U.adjoint()});
  PolyMatrix M = norm0.U;
  ClassCounts counts = norm0.counts;
  std::vector<LaurentPoly> q = clean(row_times(p.entries, norm0.U), counts);

  const int bound = reduction_bound(p.entries);
  int J = 0;
  while (true) {
    const auto sup = vec_support(q);
    if (!sup) throw NumericalBreakdown("extend: vector vanished during reduction");
    const int len = sup->high - sup->low;
    if (len == 0) break;
    if (J > bound) throw NumericalBreakdown("extend: support reduction exceeded its step bound");
    PolyMatrix A;
    ExtensionTrace::Kind kind;
    int expected;
    if (len >= 2) {
      const CanonicalForm cf = canonical_form(q, counts);
      A = chop(cf.Uq * support_reducer(cf.q0, cf.layout) * cf.Uq.adjoint());
      kind = ExtensionTrace::Kind::reduce;
      expected = len - 2;
    } else {
      OddStep os = odd_step(q, counts);
      A = os.A;
      counts = os.counts;
      kind = ExtensionTrace::Kind::odd;
      expected = 0;
    }
    q = clean(row_times(q, A), counts);
    const auto next = vec_support(q);
    if (!next || next->high - next->low != expected) {
      throw NumericalBreakdown("extend: support reduction stalled");
    }
    M = chop(M * A);
    out.trace.steps.push_back({kind, A.adjoint()});
    ++J;
  }

  const auto off = offsets(counts);
  const double tol = 1e-9 * vec_max(q);
  Vec f = coeffs_at(q, 0, off[0], off[1]);
  for (int i = off[1]; i < s; ++i) {
    if (q[static_cast<std::size_t>(i)].max_abs() > tol) throw NumericalBreakdown("extend: residual outside class 1");
  }
  const PolyMatrix Uf = householder_unitary(f);
  const PolyMatrix U = block_diagonal(Uf, PolyMatrix::identity(s - counts[0]));
  M = chop(M * U);
  out.trace.steps.push_back({ExtensionTrace::Kind::finalize, U.adjoint()});
  out.trace.J = J;
  out.Pe = M.adjoint();

  for (int r = 0; r < s; ++r) {
    int best = -1;
    double best_mag = 0.0;
    for (int j = 0; j < s; ++j) {
      const double mag = out.Pe(r, j).max_abs();
      if (mag > best_mag) {
        best = j;
        best_mag = mag;
      }
    }
    if (best < 0) throw NumericalBreakdown("extend: zero row in the completion");
    const auto sp = sym_of(out.Pe(r, best), 1e-8);
    if (!sp) throw NumericalBreakdown("extend: completion entry without symmetry");
    const SymmetrySpec& col = out.col_syms[static_cast<std::size_t>(best)];
    out.row_syms.push_back({sp->epsilon * col.epsilon, sp->center2 - col.center2});
  }
  std::vector<SymmetrySpec> theta1;
  for (const auto& rs : out.row_syms) theta1.push_back({rs.epsilon, -rs.center2});
  if (!symmetry_compatible(out.Pe, theta1, out.col_syms, 1e-8)) {
    throw NumericalBreakdown("extend: completion does not have compatible symmetry");
  }
  return out;
}

}  // namespace framelet
