// Copyright 2026 The Colorlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORLAB_ERRORS_H_
#define COLORLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace colorlab {

// Base class of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (wrong family, malformed
// input, unsupported bound, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded. The message names the count.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed, e.g. an LP point claimed to be basic
// has no support vertex of degree at most two.
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

}  // namespace colorlab

#endif  // COLORLAB_ERRORS_H_
