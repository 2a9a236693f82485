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

#include <string>

#include <nlohmann/json.hpp>

#include "framelet/extension.hpp"
#include "framelet/filter_bank.hpp"
#include "framelet/laurent.hpp"
#include "framelet/poly_matrix.hpp"

namespace framelet {

using Json = nlohmann::json;

// All readers throw InvalidArgument on malformed input.

/// {"offset": int, "coeffs": [[re, im], ...]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[poly, ...], ...]}
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

/// {"J": J, "steps": [{"kind": "init" | "reduce" | "odd" | "finalize", "factor": matrix}]}
Json trace_to_json(const ExtensionTrace& t);
ExtensionTrace trace_from_json(const Json& j);

Json bank_to_json(const FilterBank& bank, bool include_trace = false);
FilterBank bank_from_json(const Json& j);

std::string dump_bank(const FilterBank& bank, bool include_trace = false);
FilterBank parse_bank(const std::string& text);

void write_bank(const std::string& path, const FilterBank& bank, bool include_trace = false);
FilterBank read_bank(const std::string& path);

}  // namespace framelet
