// Copyright 2026 The zsinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZSINFO_ERRORS_HPP_
#define ZSINFO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zsinfo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible label sets or tensor shapes.
struct DimensionError : Error {
  using Error::Error;
};

// Well-formed input that violates a domain invariant (mass, stochasticity,
// schema fields, absolute continuity, degenerate densities, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Numerical failure; in float mode the message recommends rational mode.
struct ArithmeticError : Error {
  using Error::Error;
};

}  // namespace zsinfo

#endif  // ZSINFO_ERRORS_HPP_
