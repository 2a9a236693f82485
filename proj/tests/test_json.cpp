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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "framelet/errors.hpp"
#include "framelet/json_io.hpp"
#include "framelet/reference_banks.hpp"

namespace framelet {
namespace {

using namespace std::complex_literals;

void expect_same(const FilterBank& a, const FilterBank& b, double tol) {
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.m, b.m);
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.generator, b.generator);
  EXPECT_LE(max_abs_diff(a.lowpass, b.lowpass), tol);
  ASSERT_EQ(a.L(), b.L());
  for (int l = 0; l < a.L(); ++l) {
    const auto& x = a.highpass[static_cast<std::size_t>(l)];
    const auto& y = b.highpass[static_cast<std::size_t>(l)];
    EXPECT_LE(max_abs_diff(x.poly, y.poly), tol);
    EXPECT_EQ(x.epsilon, y.epsilon);
    EXPECT_EQ(x.center, y.center);
  }
  ASSERT_EQ(a.dual_lowpass.has_value(), b.dual_lowpass.has_value());
  if (a.dual_lowpass) EXPECT_LE(max_abs_diff(*a.dual_lowpass, *b.dual_lowpass), tol);
}

TEST(Json, PolySchema) {
  const LaurentPoly p(-2, {1.0, 0.5i, -3.0});
  const Json j = poly_to_json(p);
  EXPECT_EQ(j.at("offset").get<int>(), -2);
  ASSERT_EQ(j.at("coeffs").size(), 3u);
  EXPECT_EQ(j.at("coeffs")[1][1].get<double>(), 0.5);
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_TRUE(poly_from_json(poly_to_json(LaurentPoly())).is_zero());
  // plain real numbers are accepted too
  EXPECT_EQ(poly_from_json(Json::parse(R"({"offset": 1, "coeffs": [2, [0, 1]]})")), LaurentPoly(1, {2.0, 1.0i}));
}

TEST(Json, BankSchemaKeys) {
  const Json j = bank_to_json(construct({3, 4, 2}));
  for (const char* key : {"dilation", "m", "n", "L", "lowpass", "highpass", "generator"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("L").get<int>(), 3);
  EXPECT_EQ(j.at("highpass")[2].at("center"), Json::array({1, 1}));
  EXPECT_EQ(j.at("highpass")[2].at("epsilon").get<int>(), -1);
  EXPECT_FALSE(j.contains("trace"));
}

TEST(Json, BankRoundTripIsExact) {
  for (const PseudoSplineParams prm : {PseudoSplineParams{2, 4, 2}, PseudoSplineParams{3, 5, 2}, PseudoSplineParams{4, 3, 1}}) {
    const FilterBank bank = construct(prm);
    const FilterBank back = parse_bank(dump_bank(bank));
    expect_same(bank, back, 0.0);
    const VerificationReport a = verify(bank), b = verify(back);
    EXPECT_EQ(a.uep_residual, b.uep_residual);
    EXPECT_EQ(a.vm_orders, b.vm_orders);
    EXPECT_EQ(a.symmetry_ok, b.symmetry_ok);
  }
}

TEST(Json, TraceRoundTrip) {
  const FilterBank bank = construct({3, 4, 2});
  ASSERT_TRUE(bank.trace);
  const FilterBank back = parse_bank(dump_bank(bank, true));
  ASSERT_TRUE(back.trace);
  EXPECT_EQ(back.trace->J, bank.trace->J);
  ASSERT_EQ(back.trace->steps.size(), bank.trace->steps.size());
  for (std::size_t i = 0; i < back.trace->steps.size(); ++i) {
    EXPECT_EQ(back.trace->steps[i].kind, bank.trace->steps[i].kind);
    EXPECT_LE(max_abs_diff(back.trace->steps[i].factor, bank.trace->steps[i].factor), 0.0);
  }
  EXPECT_LE(max_abs_diff(back.trace->replay(), bank.trace->replay()), 0.0);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_bank("{not json"), InvalidArgument);
  EXPECT_THROW(parse_bank("[]"), InvalidArgument);
  Json good = bank_to_json(construct({2, 4, 2}));
  auto broken = [&](auto edit) {
    Json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j.erase("lowpass"); })), InvalidArgument);
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j["L"] = 5; })), InvalidArgument);
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j["highpass"][0]["epsilon"] = 2; })), InvalidArgument);
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j["highpass"][0]["center"] = Json::array({1, 0}); })), InvalidArgument);
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j["dilation"] = "two"; })), InvalidArgument);
  EXPECT_THROW(bank_from_json(broken([](Json& j) { j["lowpass"]["coeffs"][0] = Json::array({1}); })), InvalidArgument);
  EXPECT_THROW(read_bank("/nonexistent/bank.json"), InvalidArgument);
}

TEST(Json, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "framelet_json_roundtrip.json";
  const FilterBank bank = construct({2, 5, 3});
  write_bank(path.string(), bank);
  expect_same(bank, read_bank(path.string()), 0.0);
  std::filesystem::remove(path);
}

TEST(Json, FixtureFilesMatchBuiltIns) {
  for (const auto& name : fixture_names()) {
    const std::string path = std::string(FRAMELET_FIXTURE_DIR) + "/" + name + ".json";
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    expect_same(read_bank(path), fixture(name), 0.0);
  }
  EXPECT_THROW(fixture("nope"), InvalidArgument);
}

}  // namespace
}  // namespace framelet
