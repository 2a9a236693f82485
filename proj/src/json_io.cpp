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

#include "framelet/json_io.hpp"

#include <fstream>
#include <sstream>

#include "framelet/errors.hpp"

namespace framelet {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const Complex& c : p.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return {{"offset", p.offset()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const Json& j) {
  const int offset = as_int(field(j, "offset"), "offset");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw InvalidArgument("coeffs must be an array");
  std::vector<Complex> coeffs;
  coeffs.reserve(cs.size());
  for (const Json& c : cs) {
    if (c.is_number()) {
      coeffs.emplace_back(c.get<double>(), 0.0);
      continue;
    }
    if (!c.is_array() || c.size() != 2) throw InvalidArgument("each coefficient must be [re, im]");
    coeffs.emplace_back(as_double(c[0], "re"), as_double(c[1], "im"));
  }
  return LaurentPoly(offset, std::move(coeffs));
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(poly_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const Json& j) {
  const int r = as_int(field(j, "rows"), "rows");
  const int c = as_int(field(j, "cols"), "cols");
  if (r < 0 || c < 0) throw InvalidArgument("matrix dimensions must be nonnegative");
  const Json& e = field(j, "entries");
  if (!e.is_array() || static_cast<int>(e.size()) != r) throw InvalidArgument("matrix entries do not match rows");
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const Json& row = e[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != c) throw InvalidArgument("matrix row does not match cols");
    for (int k = 0; k < c; ++k) m(i, k) = poly_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json trace_to_json(const ExtensionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back({{"kind", to_string(s.kind)}, {"factor", matrix_to_json(s.factor)}});
  return {{"J", t.J}, {"steps", steps}};
}

ExtensionTrace trace_from_json(const Json& j) {
  ExtensionTrace t;
  t.J = as_int(field(j, "J"), "J");
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw InvalidArgument("steps must be an array");
  for (const Json& s : steps) {
    const Json& kind = field(s, "kind");
    if (!kind.is_string()) throw InvalidArgument("step kind must be a string");
    t.steps.push_back({kind_from_string(kind.get<std::string>()), matrix_from_json(field(s, "factor"))});
  }
  return t;
}

Json bank_to_json(const FilterBank& bank, bool include_trace) {
  Json hp = Json::array();
  for (const auto& h : bank.highpass) {
    hp.push_back({{"poly", poly_to_json(h.poly)}, {"epsilon", h.epsilon}, {"center", {h.center.num, h.center.den}}});
  }
  Json j = {{"dilation", bank.d},       {"m", bank.m},        {"n", bank.n},
            {"L", bank.L()},            {"lowpass", poly_to_json(bank.lowpass)},
            {"highpass", hp},           {"generator", bank.generator}};
  if (bank.dual_lowpass) j["dual_lowpass"] = poly_to_json(*bank.dual_lowpass);
  if (include_trace && bank.trace) j["trace"] = trace_to_json(*bank.trace);
  return j;
}

FilterBank bank_from_json(const Json& j) {
  FilterBank bank;
  bank.d = as_int(field(j, "dilation"), "dilation");
  if (bank.d < 2) throw InvalidArgument("dilation must be at least 2");
  if (j.contains("m")) bank.m = as_int(j["m"], "m");
  if (j.contains("n")) bank.n = as_int(j["n"], "n");
  bank.lowpass = poly_from_json(field(j, "lowpass"));
  const Json& hp = field(j, "highpass");
  if (!hp.is_array()) throw InvalidArgument("highpass must be an array");
  for (const Json& h : hp) {
    HighPass f;
    f.poly = poly_from_json(field(h, "poly"));
    f.epsilon = as_int(field(h, "epsilon"), "epsilon");
    if (f.epsilon != 1 && f.epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
    const Json& c = field(h, "center");
    if (!c.is_array() || c.size() != 2) throw InvalidArgument("center must be [num, den]");
    const long num = as_int(c[0], "center numerator");
    const long den = as_int(c[1], "center denominator");
    if (den == 0) throw InvalidArgument("center denominator must be nonzero");
    f.center = Rational::make(num, den);
    bank.highpass.push_back(std::move(f));
  }
  if (j.contains("L") && as_int(j["L"], "L") != bank.L()) throw InvalidArgument("L does not match the number of high-pass filters");
  if (j.contains("generator")) {
    if (!j["generator"].is_string()) throw InvalidArgument("generator must be a string");
    bank.generator = j["generator"].get<std::string>();
  }
  if (j.contains("dual_lowpass")) bank.dual_lowpass = poly_from_json(j["dual_lowpass"]);
  if (j.contains("trace")) bank.trace = trace_from_json(j["trace"]);
  return bank;
}

std::string dump_bank(const FilterBank& bank, bool include_trace) { return bank_to_json(bank, include_trace).dump(2); }

FilterBank parse_bank(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  try {
    return bank_from_json(j);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad filter bank: ") + e.what());
  }
}

void write_bank(const std::string& path, const FilterBank& bank, bool include_trace) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << dump_bank(bank, include_trace) << '\n';
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

FilterBank read_bank(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bank(ss.str());
}

}  // namespace framelet
