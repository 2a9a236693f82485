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

#include <stdexcept>
#include <string>

namespace framelet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside their documented domain (bad d, m, n, malformed data).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An input violates an operation's mathematical precondition, e.g. a
/// vector that is not of unit norm or a subsymbol set without symmetry.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Floating-point computation could not complete reliably: unpaired roots,
/// stalled support reduction, residual beyond tolerance.
class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

}  // namespace framelet
