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

#include "zxft/outcome.hpp"

#include <algorithm>
#include <iterator>

namespace zxft {

OutcomeExpr::OutcomeExpr(std::vector<VarId> vars, bool konst) : konst_(konst) {
  std::sort(vars.begin(), vars.end());
  // Pairs cancel.
  for (std::size_t i = 0; i < vars.size();) {
    if (i + 1 < vars.size() && vars[i] == vars[i + 1]) {
      i += 2;
    } else {
      vars_.push_back(vars[i]);
      ++i;
    }
  }
}

bool OutcomeExpr::contains(VarId v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

OutcomeExpr& OutcomeExpr::operator^=(const OutcomeExpr& o) {
  std::vector<VarId> out;
  out.reserve(vars_.size() + o.vars_.size());
  std::set_symmetric_difference(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                                std::back_inserter(out));
  vars_ = std::move(out);
  konst_ ^= o.konst_;
  return *this;
}

bool OutcomeExpr::evaluate(const std::map<VarId, bool>& assignment) const {
  bool v = konst_;
  for (auto id : vars_) {
    auto it = assignment.find(id);
    if (it != assignment.end()) v ^= it->second;
  }
  return v;
}

std::string OutcomeExpr::to_string() const {
  if (vars_.empty()) return konst_ ? "1" : "0";
  std::string s;
  for (auto id : vars_) {
    if (!s.empty()) s += " + ";
    s += "b" + std::to_string(id);
  }
  if (konst_) s += " + 1";
  return s;
}

}  // namespace zxft
