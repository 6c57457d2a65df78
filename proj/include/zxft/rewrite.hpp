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
#include <optional>
#include <string>
#include <vector>

#include "zxft/diagram.hpp"
#include "zxft/pauli_web.hpp"

namespace zxft {

enum class Rule {
  Fuse,
  Split,
  ColorFlip,
  RemoveIdentity,
  /// Inverse of RemoveIdentity: a phase-free two-leg spider spliced into an edge.
  InsertIdentity,
  /// Drops the self-loops of one spider (plain: exact; Hadamard: adds pi).
  RemoveLoops,
  /// Gives a spider a fresh outcome variable. Not an equivalence: the b = 0
  /// branch is the original network.
  AttachInstrument,
  /// Removes a spider's outcome port. Not an equivalence either.
  DetachInstrument,
};

std::string to_string(Rule r);
Rule rule_from_string(const std::string& s);

/// An edge end at a spider as seen by the web transport: `swap` is set when the
/// spider sits at the B end of a Hadamard edge.
struct EdgeEnd {
  EdgeId edge = -1;
  bool swap = false;
  bool operator==(const EdgeEnd&) const = default;
};

/// One applied rule with the ids it consumed and created. `replay` re-executes
/// it from `spider`, `other`, `edge` and `moved`/`flag`/`kind`; everything
/// else is recorded output used by the web transport.
struct RewriteStep {
  Rule rule = Rule::Fuse;
  SpiderId spider = -1;  // Fuse: kept; Split/Flip/Identity/Loops/Attach/Detach: subject; Insert: created
  SpiderId other = -1;   // Fuse: absorbed; Split: created
  EdgeId edge = -1;      // Fuse: connecting edge; Insert: replaced edge
  std::vector<EdgeId> moved;  // Split: edges moved to the new spider
  bool flag = false;          // Split: instrument goes to the new spider
  SpiderKind kind = SpiderKind::Z;  // kind of the subject before the step (Insert: kind of the new spider)

  std::vector<EdgeId> created;  // Split: {bridge}; Identity: {merged}; Insert: {a side, b side}
  std::vector<EdgeEnd> ends;    // ends of the subject consumed by the step (see transport)
  std::vector<std::pair<EdgeId, EdgeKind>> loops;  // self-loops removed during the step
  std::vector<EdgeId> flipped_a;  // ColorFlip: edges where the subject is endpoint A
  bool instrument_a = false;      // Fuse: subject had an instrument
  bool instrument_b = false;      // Fuse: absorbed spider had an instrument
  VarId var = -1;                 // Attach: the new variable
  std::optional<OutcomeExpr> expr;  // Attach/Detach: the instrument added / removed
  std::string label;                // Attach: label of the new variable

  bool operator==(const RewriteStep&) const = default;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  void append(const RewriteTrace& o) { steps.insert(steps.end(), o.steps.begin(), o.steps.end()); }
};

RewriteStep fuse(Diagram& d, SpiderId s1, SpiderId s2);
/// Moves the listed edges to a new spider of the same kind joined to `s` by a
/// plain edge. The phase and instrument stay on `s` unless
/// `instrument_to_new`, in which case both move.
RewriteStep split(Diagram& d, SpiderId s, const std::vector<EdgeId>& moved, bool instrument_to_new = false);
RewriteStep color_flip(Diagram& d, SpiderId s);
RewriteStep remove_identity(Diagram& d, SpiderId s);
RewriteStep insert_identity(Diagram& d, EdgeId e, SpiderKind kind);
RewriteStep remove_loops(Diagram& d, SpiderId s);
RewriteStep attach_instrument(Diagram& d, SpiderId s, const std::string& label = {});
RewriteStep detach_instrument(Diagram& d, SpiderId s);

/// Re-executes a recorded step; throws if it no longer applies or produces
/// different ids.
RewriteStep apply(Diagram& d, const RewriteStep& step);
Diagram replay(Diagram d, const RewriteTrace& trace);

/// Moves a web across one step. Equivalence steps keep the outer signature and
/// the sign; Attach/Detach add/remove the instrument's expression from the
/// sign when the spider is included.
PauliWeb transport_web(const PauliWeb& w, const RewriteStep& step);
/// Same, but first verifies `w` on `pre` (the diagram before the step).
PauliWeb transport_web(const Diagram& pre, const PauliWeb& w, const RewriteStep& step);
PauliWeb transport_web(const PauliWeb& w, const RewriteTrace& trace);

struct CanonicalOptions {
  /// With a seed, every choice among applicable rewrites is random.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Flips every X spider, then fuses and removes identities until neither
/// applies: only Z spiders, no plain edge between two spiders, and no
/// phase-free two-leg spider without an instrument.
std::pair<Diagram, RewriteTrace> to_canonical(Diagram d, const CanonicalOptions& opt = {});
bool is_canonical(const Diagram& d);

std::string trace_to_json(const RewriteTrace& t, int indent = 1);
RewriteTrace trace_from_json(const std::string& text);

}  // namespace zxft
