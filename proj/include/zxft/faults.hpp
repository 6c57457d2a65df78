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

#include <cstdint>
#include <string>
#include <vector>

#include "zxft/diagram.hpp"
#include "zxft/pauli_web.hpp"

namespace zxft {

/// A Pauli inserted on an edge next to endpoint A (or B). Y is X followed by
/// Z at the same location.
struct PauliFault {
  EdgeId edge = -1;
  bool side_a = true;
  Pauli pauli = Pauli::X;
  bool operator==(const PauliFault&) const = default;
};

/// One bit per check of a basis, in basis order.
using Syndrome = std::vector<bool>;

/// Splices pi spiders into the faulted edges: X is an X spider, Z a Z spider,
/// Y both. The spider sits on the plain segment next to the chosen end.
/// Throws IntegrityError for unknown edges.
Diagram inject(const Diagram& d, const std::vector<PauliFault>& faults);

/// Whether a single fault flips a web: X iff red, Z iff green, Y iff exactly
/// one of them, read at the faulted end.
bool flips(const Diagram& d, const PauliFault& f, const PauliWeb& w);

/// Check flips computed from the highlights, without insertion.
Syndrome syndrome(const Diagram& d, const std::vector<PauliFault>& faults, const WebBasis& basis);

/// Check values observed by tableau simulation of a (faulted) network: bit k
/// is the value of check k's sign expression, which must be the same in every
/// run. Throws ContractViolation when a check parity varies between runs.
Syndrome observed_syndrome(const Diagram& faulted, const WebBasis& basis, std::size_t runs = 16,
                           std::uint64_t seed = 0);

struct EdgeCoverage {
  EdgeId edge = -1;
  std::size_t red_checks = 0;
  std::size_t green_checks = 0;
  bool touches_port = false;
  bool covered() const { return red_checks > 0 && green_checks > 0; }
};

/// Per-edge count of checks with a red and with a green highlight, read at
/// endpoint A.
std::vector<EdgeCoverage> detectability_map(const Diagram& d, const WebBasis& basis);

struct CorrelatorFlip {
  bool flipped = false;
  /// The correlator's outcome dependence (its Pauli-frame contribution).
  OutcomeExpr frame;
};

CorrelatorFlip correlator_flip(const Diagram& d, const std::vector<PauliFault>& faults, const PauliWeb& web);

/// JSON list of {"edge": id, "side": "a"|"b", "pauli": "X"|"Y"|"Z"}.
std::vector<PauliFault> faults_from_json(const std::string& text);
std::string faults_to_json(const std::vector<PauliFault>& faults);

}  // namespace zxft
