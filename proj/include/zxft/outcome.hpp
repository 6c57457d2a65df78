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

#include <map>
#include <string>
#include <vector>

namespace zxft {

using VarId = int;

/// Affine GF(2) form `konst XOR (XOR of vars)`. Vars are kept sorted and
/// unique, so equal expressions compare equal.
class OutcomeExpr {
 public:
  OutcomeExpr() = default;
  static OutcomeExpr var(VarId v) {
    OutcomeExpr e;
    e.vars_.push_back(v);
    return e;
  }
  static OutcomeExpr constant(bool c) {
    OutcomeExpr e;
    e.konst_ = c;
    return e;
  }
  OutcomeExpr(std::vector<VarId> vars, bool konst);

  const std::vector<VarId>& vars() const { return vars_; }
  bool konst() const { return konst_; }
  bool is_constant() const { return vars_.empty(); }
  bool is_zero() const { return vars_.empty() && !konst_; }
  bool contains(VarId v) const;

  OutcomeExpr& operator^=(const OutcomeExpr& o);
  OutcomeExpr& operator^=(bool c) {
    konst_ ^= c;
    return *this;
  }
  friend OutcomeExpr operator^(OutcomeExpr a, const OutcomeExpr& b) { return a ^= b; }
  bool operator==(const OutcomeExpr& o) const = default;

  /// Missing variables evaluate as 0.
  bool evaluate(const std::map<VarId, bool>& assignment) const;
  /// e.g. "b3 + b7 + 1"; "0" for the zero expression.
  std::string to_string() const;

 private:
  std::vector<VarId> vars_;
  bool konst_ = false;
};

}  // namespace zxft
