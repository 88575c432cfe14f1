// Copyright 2026 The gammahom Authors
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

#ifndef GAMMAHOM_ERRORS_HPP
#define GAMMAHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammahom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor or operation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Source/target mismatch when composing maps.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A computed object violates an algebraic identity (d^2 != 0, sign
/// inconsistency, non-commuting square).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A level of some multisimplicial object is larger than the configured
/// cell budget. `where()` names the offending argument.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string where)
      : Error(what + " at " + where), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace gammahom

#endif  // GAMMAHOM_ERRORS_HPP
