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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zxft/diagram.hpp"
#include "zxft/gf2.hpp"

namespace zxft {

enum class Pauli { I, X, Y, Z };
char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Red is Z-type, green is X-type.
struct Highlight {
  bool r = false;
  bool g = false;
  bool none() const { return !r && !g; }
  Highlight swapped() const { return {g, r}; }
  bool operator==(const Highlight&) const = default;
};

/// Highlights are stored per edge as seen from endpoint A. At endpoint B the
/// value is equal across a plain edge and swapped across a Hadamard edge.
/// Only highlighted edges are stored.
struct PauliWeb {
  std::map<EdgeId, Highlight> edges;
  std::set<SpiderId> included;
  OutcomeExpr sign;

  Highlight get(EdgeId e) const;
  void set(EdgeId e, Highlight h);
  /// Highlight seen at `end` of edge `e`.
  Highlight at(const Diagram& d, EdgeId e, Endpoint end) const;
  bool empty() const { return edges.empty() && included.empty(); }
  bool operator==(const PauliWeb&) const = default;
};

/// Pauli on each boundary port, derived from the highlight at the port end.
using OuterSignature = std::map<PortId, Pauli>;

OuterSignature outer_signature(const Diagram& d, const PauliWeb& w);
bool outer_is_identity(const OuterSignature& s);
/// "in:ZZI|out:XXI" with ports of each direction in id order.
std::string signature_string(const Diagram& d, const OuterSignature& s);
/// Inverse of signature_string; unknown length or characters throw ParseError.
OuterSignature parse_signature(const Diagram& d, const std::string& text);

/// Fixed variable layout: (r, g) per edge in edge-id order, then one inclusion
/// bit per instrument spider in spider-id order.
class WebCoder {
 public:
  explicit WebCoder(const Diagram& d);
  std::size_t size() const { return 2 * edge_ids_.size() + instruments_.size(); }
  std::size_t edge_index(EdgeId e) const { return edge_index_.at(e); }
  std::size_t instrument_index(SpiderId s) const { return instrument_index_.at(s); }
  const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }
  const std::vector<SpiderId>& instruments() const { return instruments_; }

  gf2::BitVec encode(const PauliWeb& w) const;
  /// Decodes and recomputes the sign.
  PauliWeb decode(const gf2::BitVec& v) const;

 private:
  const Diagram* d_;
  std::vector<EdgeId> edge_ids_;
  std::vector<SpiderId> instruments_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<SpiderId, std::size_t> instrument_index_;
};

/// Homogeneous GF(2) system whose solutions are exactly the webs. Throws
/// UnsupportedPhase if any spider phase is not 0 or pi.
gf2::BitMatrix constraints(const Diagram& d);
gf2::BitMatrix constraints(const Diagram& d, const WebCoder& coder);

/// Constant part: pi-spiders whose own-color indicator is set, plus r*g on
/// every Hadamard edge. Variable part: XOR of included instrument expressions.
OutcomeExpr sign(const PauliWeb& w, const Diagram& d);

/// Empty iff every local rule holds and the stored sign matches sign().
std::vector<std::string> verify(const PauliWeb& w, const Diagram& d);

/// Per-edge and per-inclusion XOR. The sign is recomputed on the combined web:
/// the Hadamard-edge term is not linear, so XOR of the two signs is wrong when
/// both webs highlight the same Hadamard edge in different colors.
PauliWeb combine(const Diagram& d, const PauliWeb& a, const PauliWeb& b);

struct WebBasis {
  std::vector<PauliWeb> outer;
  /// Zero outer signature; sign.vars() nonempty. The sign is the parity that
  /// must vanish in the absence of errors.
  std::vector<PauliWeb> checks;
  /// Zero outer signature and outcome-free.
  std::vector<PauliWeb> null;
  std::size_t size() const { return outer.size() + checks.size() + null.size(); }
};

WebBasis web_basis(const Diagram& d);

/// Some web with the given outer signature (ports absent from `target` are I).
/// With `outcome_free` the sign must not depend on any outcome variable.
std::optional<PauliWeb> find_web(const Diagram& d, const OuterSignature& target, bool outcome_free = false);

/// Dimension of the span of the given webs, encoded with `coder`.
std::size_t span_rank(const WebCoder& coder, const std::vector<PauliWeb>& webs);

}  // namespace zxft
