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

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxft/error.hpp"
#include "zxft/outcome.hpp"

namespace zxft {

using SpiderId = int;
using EdgeId = int;
using PortId = int;
using Coord = std::array<double, 3>;

enum class SpiderKind { Z, X };
enum class EdgeKind { Plain, Hadamard };
enum class PortDir { In, Out };

inline SpiderKind flipped(SpiderKind k) { return k == SpiderKind::Z ? SpiderKind::X : SpiderKind::Z; }
inline EdgeKind toggled(EdgeKind k) { return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain; }
inline EdgeKind operator^(EdgeKind a, EdgeKind b) { return a == b ? EdgeKind::Plain : EdgeKind::Hadamard; }

/// Spider phase in quarter turns: the phase is quarter * pi/2.
struct Phase {
  int quarter = 0;

  constexpr Phase() = default;
  constexpr explicit Phase(int q) : quarter(((q % 4) + 4) % 4) {}
  static constexpr Phase zero() { return Phase(0); }
  static constexpr Phase pi() { return Phase(2); }

  constexpr bool is_zero() const { return quarter == 0; }
  constexpr bool is_pauli() const { return quarter == 0 || quarter == 2; }
  constexpr Phase operator+(Phase o) const { return Phase(quarter + o.quarter); }
  constexpr bool operator==(const Phase&) const = default;
};

struct Endpoint {
  enum class Type { Spider, Port };
  Type type = Type::Spider;
  int id = -1;

  static Endpoint spider(SpiderId s) { return {Type::Spider, s}; }
  static Endpoint port(PortId p) { return {Type::Port, p}; }
  bool is_spider() const { return type == Type::Spider; }
  bool is_port() const { return type == Type::Port; }
  auto operator<=>(const Endpoint&) const = default;
  std::string to_string() const { return (is_spider() ? "s" : "p") + std::to_string(id); }
};

struct Spider {
  SpiderId id = -1;
  SpiderKind kind = SpiderKind::Z;
  Phase phase;
  /// Present iff the spider has a classical outcome port. The effective phase
  /// is phase + pi * value(instrument).
  std::optional<OutcomeExpr> instrument;
  std::optional<Coord> coord;
  /// Incident edge ids; a self-loop appears twice.
  std::vector<EdgeId> edges;
};

struct Edge {
  EdgeId id = -1;
  Endpoint a;
  Endpoint b;
  EdgeKind kind = EdgeKind::Plain;

  bool is_loop() const { return a == b; }
  bool touches(Endpoint e) const { return a == e || b == e; }
  Endpoint other(Endpoint e) const { return a == e ? b : a; }
};

struct Port {
  PortId id = -1;
  PortDir dir = PortDir::In;
  std::string label;
  std::optional<Coord> coord;
  std::vector<EdgeId> edges;
};

struct OutcomeVarInfo {
  VarId id = -1;
  std::string label;
};

struct Violation {
  std::string what;
  bool operator==(const Violation&) const = default;
};

/// A ZX instrument network: spiders, typed edges, boundary ports and
/// classical outcome variables. Ids are allocated from per-kind counters and
/// are never reused within one diagram.
class Diagram {
 public:
  SpiderId add_spider(SpiderKind kind, Phase phase = {}, std::optional<OutcomeExpr> instrument = {});
  PortId add_port(PortDir dir, std::string label = {});
  EdgeId add_edge(Endpoint a, Endpoint b, EdgeKind kind = EdgeKind::Plain);
  VarId add_outcome_var(std::string label = {});

  /// Removes the spider and every incident edge.
  void remove_spider(SpiderId id);
  void remove_edge(EdgeId id);
  /// Removes the port and its incident edge.
  void remove_port(PortId id);
  void remove_outcome_var(VarId id);

  // Insertion with explicit ids, used by deserialization. Counters advance past
  // the given id.
  void insert_spider(Spider s);
  void insert_port(Port p);
  void insert_edge(Edge e);
  void insert_outcome_var(OutcomeVarInfo v);

  const std::map<SpiderId, Spider>& spiders() const { return spiders_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::map<PortId, Port>& ports() const { return ports_; }
  const std::map<VarId, OutcomeVarInfo>& outcome_vars() const { return vars_; }

  bool has_spider(SpiderId id) const { return spiders_.count(id) != 0; }
  bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }
  bool has_port(PortId id) const { return ports_.count(id) != 0; }
  bool has_endpoint(Endpoint e) const { return e.is_spider() ? has_spider(e.id) : has_port(e.id); }

  const Spider& spider(SpiderId id) const;
  const Edge& edge(EdgeId id) const;
  const Port& port(PortId id) const;

  void set_kind(SpiderId id, SpiderKind kind);
  void set_phase(SpiderId id, Phase phase);
  void set_instrument(SpiderId id, std::optional<OutcomeExpr> instrument);
  void set_spider_coord(SpiderId id, std::optional<Coord> c);
  void set_port_coord(PortId id, std::optional<Coord> c);
  void set_edge_kind(EdgeId id, EdgeKind kind);
  /// Moves the `from` end of edge `id` to `to`. For a self-loop only the B end moves.
  void reattach(EdgeId id, Endpoint from, Endpoint to);

  /// Incident edge ids of an endpoint (self-loops listed twice).
  const std::vector<EdgeId>& incident(Endpoint e) const;
  std::size_t degree(SpiderId id) const { return spider(id).edges.size(); }

  /// Ports in id order filtered by direction.
  std::vector<PortId> ports_of(PortDir dir) const;
  /// Neighbouring port of a spider, if any edge of it reaches a port.
  bool touches_port(SpiderId id) const;

  std::size_t instrument_count() const;
  std::size_t port_count() const { return ports_.size(); }

  /// Reports dangling endpoints, ports with degree != 1, duplicate or
  /// inconsistent incidence records, and instrument references to unknown
  /// outcome variables.
  std::vector<Violation> validate() const;
  bool valid() const { return validate().empty(); }

  int next_spider_id() const { return next_spider_; }
  int next_edge_id() const { return next_edge_; }
  int next_port_id() const { return next_port_; }
  int next_var_id() const { return next_var_; }
  void reserve_ids(int spider, int edge, int port, int var);

 private:
  std::vector<EdgeId>& incidence(Endpoint e);

  std::map<SpiderId, Spider> spiders_;
  std::map<EdgeId, Edge> edges_;
  std::map<PortId, Port> ports_;
  std::map<VarId, OutcomeVarInfo> vars_;
  int next_spider_ = 0;
  int next_edge_ = 0;
  int next_port_ = 0;
  int next_var_ = 0;
};

std::string to_string(SpiderKind k);
std::string to_string(EdgeKind k);
std::string to_string(PortDir d);

/// Removes every self-loop on `s`: a plain loop is dropped, a Hadamard loop
/// adds pi to the phase. Both are exact up to a global scalar. Returns the
/// removed edges with their kinds.
std::vector<std::pair<EdgeId, EdgeKind>> remove_self_loops(Diagram& d, SpiderId s);

// JSON "zxft/1" format.
std::string serialize(const Diagram& d, int indent = 1);
Diagram deserialize(const std::string& text);

/// Canonical-labeling string invariant under id renaming. Respects spider
/// kinds and phases, edge kinds and multiplicities, and port directions and
/// labels; instruments are not part of the label. Exponential in the worst
/// case (symmetric, unlabeled graphs); throws SizeError past a search budget.
std::string fingerprint(const Diagram& d);

std::string to_dot(const Diagram& d);
/// Wavefront-OBJ-style "v x y z" / "l i j" listing; nodes without coords are
/// placed on a line at z = -1.
std::string to_obj(const Diagram& d);

}  // namespace zxft
