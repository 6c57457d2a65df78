// Copyright 2026 The zxft Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace zxft {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reference to a spider, edge, port or outcome variable that does not exist.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. Carries the offending field path.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error(what + (field.empty() ? "" : " (at " + field + ")")), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

class UnsupportedPhase : public Error {
 public:
  UnsupportedPhase(int spider, const std::string& what) : Error(what), spider_(spider) {}
  int spider() const { return spider_; }

 private:
  int spider_;
};

/// A precondition on a value-level contract was violated (e.g. a web that is
/// not valid on the diagram it is transported over).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace zxft
