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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace framelet::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBreakdown = 3;
inline constexpr int kVerifyFailed = 4;

enum class Command { construct, verify, plot, info };

struct RunConfig {
  Command command = Command::info;
  std::optional<int> d, m, n;
  std::string input;
  std::string output;
  std::string fixture;
  std::optional<double> tol;
  int levels = 9;
  bool trace = false;
};

/// Tolerance after --tol, then FRAMELET_TOL, then the library default.
/// Throws InvalidArgument for an unparsable or nonpositive value.
double effective_tolerance(const RunConfig& cfg);

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses args (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framelet::cli
