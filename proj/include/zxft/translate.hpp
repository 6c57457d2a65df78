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
#include <string>
#include <vector>

#include "zxft/builders.hpp"
#include "zxft/pauli_web.hpp"
#include "zxft/rewrite.hpp"

namespace zxft {

/// Source web basis and its image under the translation trace.
struct WebMap {
  std::vector<PauliWeb> source_outer;
  std::vector<PauliWeb> source_checks;
  std::vector<PauliWeb> outer;
  std::vector<PauliWeb> checks;
};

struct Translation {
  Diagram source;
  LatticeMeta source_meta;
  Diagram diagram;
  LatticeMeta meta;
  RewriteTrace trace;
  WebMap map;
};

/// Canonical form of the CBQC lattice with a fresh outcome on every spider
/// that is neither measured nor attached to a port.
Translation cbqc_to_mbqc(const Diagram& d, const LatticeMeta& meta);
/// Splits every MBQC spider with neighbours on both sides into resource-state
/// halves joined by a Bell-measurement gadget.
Translation mbqc_to_fbqc(const Diagram& d, const LatticeMeta& meta);
/// Splits every CBQC spider into two chain halves joined by a two-body
/// measurement gadget; the stabilizer-measurement outcomes are dropped.
Translation cbqc_to_flobqc(const Diagram& d, const LatticeMeta& meta);
Translation identity_translation(const Diagram& d, const LatticeMeta& meta);
Translation translate(Flavor to, const Diagram& cbqc_diagram, const LatticeMeta& cbqc_meta);

/// The smallest check supported on the edges between points of one cell.
struct CellCheck {
  Cell cell;
  std::optional<PauliWeb> web;
  /// Outcome count per slot kind.
  std::map<std::string, int> kinds;
  /// Every cell point exists, none lies on the first or last data layer, and
  /// the web avoids port edges.
  bool interior = false;
  int outcomes() const;
};

std::vector<CellCheck> cell_checks(const Diagram& d, const LatticeMeta& meta);

/// Outcome kinds expected in an interior check of each flavor.
std::vector<std::map<std::string, int>> expected_cell_kinds(Flavor f);

struct CorrespondenceReport {
  std::vector<std::string> failures;
  std::size_t webs_checked = 0;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::size_t zero_outer_source = 0;
  std::size_t zero_outer_target = 0;
  std::size_t interior_cells = 0;
  /// "Z:2" style rendering of each interior cell's outcome kinds -> count.
  std::map<std::string, int> table;
  bool ok() const { return failures.empty(); }
};

/// Verifies every transported web, preserved outer signatures, equal ranks of
/// transported and native web spaces ("rank mismatch" otherwise), and the
/// per-flavor outcome counts of interior cell checks.
CorrespondenceReport check_correspondence(const Translation& t);

}  // namespace zxft
