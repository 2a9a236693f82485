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
#include <vector>

#include "framelet/filter_bank.hpp"

namespace framelet {

// Published reference filter banks, entered as literal data with radicals
// evaluated in double precision.

/// d = 2, m = 4, n = 2; two high-pass filters in closed form.
FilterBank reference_d2_m4_n2();
/// d = 3, m = 4, n = 2; three high-pass filters with exact coefficients.
FilterBank reference_d3_m4_n2();
/// d = 3, m = 5, n = 2; four high-pass filters rounded to five decimals.
FilterBank reference_d3_m5_n2();
/// The d = 3, m = 4, n = 2 low-pass filter with a dual low-pass filter
/// and no high-pass filters.
FilterBank reference_d3_m4_n2_dual();

/// "ref-d2-m4-n2", "ref-d3-m4-n2", "ref-d3-m5-n2", "ref-d3-m4-n2-dual".
std::vector<std::string> fixture_names();

/// Throws InvalidArgument for an unknown name.
FilterBank fixture(const std::string& name);

}  // namespace framelet
