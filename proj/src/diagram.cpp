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

#include "zxft/diagram.hpp"

#include <algorithm>
#include <set>

namespace zxft {

std::string to_string(SpiderKind k) { return k == SpiderKind::Z ? "Z" : "X"; }
std::string to_string(EdgeKind k) { return k == EdgeKind::Plain ? "plain" : "h"; }
std::string to_string(PortDir d) { return d == PortDir::In ? "in" : "out"; }

SpiderId Diagram::add_spider(SpiderKind kind, Phase phase, std::optional<OutcomeExpr> instrument) {
  if (instrument) {
    for (auto v : instrument->vars())
      if (!vars_.count(v)) throw IntegrityError("instrument references unknown outcome var " + std::to_string(v));
  }
  Spider s;
  s.id = next_spider_++;
  s.kind = kind;
  s.phase = phase;
  s.instrument = std::move(instrument);
  const SpiderId id = s.id;
  spiders_.emplace(id, std::move(s));
  return id;
}

PortId Diagram::add_port(PortDir dir, std::string label) {
  Port p;
  p.id = next_port_++;
  p.dir = dir;
  p.label = std::move(label);
  const PortId id = p.id;
  ports_.emplace(id, std::move(p));
  return id;
}

EdgeId Diagram::add_edge(Endpoint a, Endpoint b, EdgeKind kind) {
  if (!has_endpoint(a)) throw IntegrityError("edge endpoint " + a.to_string() + " does not exist");
  if (!has_endpoint(b)) throw IntegrityError("edge endpoint " + b.to_string() + " does not exist");
  Edge e{next_edge_++, a, b, kind};
  incidence(a).push_back(e.id);
  incidence(b).push_back(e.id);
  edges_.emplace(e.id, e);
  return e.id;
}

VarId Diagram::add_outcome_var(std::string label) {
  OutcomeVarInfo v{next_var_++, std::move(label)};
  vars_.emplace(v.id, v);
  return v.id;
}

void Diagram::remove_spider(SpiderId id) {
  const auto& s = spider(id);
  std::vector<EdgeId> inc = s.edges;
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  for (auto e : inc) remove_edge(e);
  spiders_.erase(id);
}

void Diagram::remove_edge(EdgeId id) {
  const Edge e = edge(id);
  auto drop = [&](Endpoint ep) {
    auto& inc = incidence(ep);
    auto it = std::find(inc.begin(), inc.end(), id);
    if (it != inc.end()) inc.erase(it);
  };
  drop(e.a);
  drop(e.b);
  edges_.erase(id);
}

void Diagram::remove_port(PortId id) {
  std::vector<EdgeId> inc = port(id).edges;
  for (auto e : inc)
    if (has_edge(e)) remove_edge(e);
  ports_.erase(id);
}

void Diagram::remove_outcome_var(VarId id) {
  if (!vars_.erase(id)) throw IntegrityError("unknown outcome var " + std::to_string(id));
}

void Diagram::insert_spider(Spider s) {
  if (spiders_.count(s.id)) throw IntegrityError("duplicate spider id " + std::to_string(s.id));
  s.edges.clear();
  next_spider_ = std::max(next_spider_, s.id + 1);
  spiders_.emplace(s.id, std::move(s));
}

void Diagram::insert_port(Port p) {
  if (ports_.count(p.id)) throw IntegrityError("duplicate port id " + std::to_string(p.id));
  p.edges.clear();
  next_port_ = std::max(next_port_, p.id + 1);
  ports_.emplace(p.id, std::move(p));
}

void Diagram::insert_edge(Edge e) {
  if (edges_.count(e.id)) throw IntegrityError("duplicate edge id " + std::to_string(e.id));
  if (!has_endpoint(e.a)) throw IntegrityError("edge endpoint " + e.a.to_string() + " does not exist");
  if (!has_endpoint(e.b)) throw IntegrityError("edge endpoint " + e.b.to_string() + " does not exist");
  next_edge_ = std::max(next_edge_, e.id + 1);
  incidence(e.a).push_back(e.id);
  incidence(e.b).push_back(e.id);
  edges_.emplace(e.id, e);
}

void Diagram::insert_outcome_var(OutcomeVarInfo v) {
  if (vars_.count(v.id)) throw IntegrityError("duplicate outcome var id " + std::to_string(v.id));
  next_var_ = std::max(next_var_, v.id + 1);
  vars_.emplace(v.id, std::move(v));
}

const Spider& Diagram::spider(SpiderId id) const {
  auto it = spiders_.find(id);
  if (it == spiders_.end()) throw IntegrityError("unknown spider " + std::to_string(id));
  return it->second;
}

const Edge& Diagram::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw IntegrityError("unknown edge " + std::to_string(id));
  return it->second;
}

const Port& Diagram::port(PortId id) const {
  auto it = ports_.find(id);
  if (it == ports_.end()) throw IntegrityError("unknown port " + std::to_string(id));
  return it->second;
}

void Diagram::set_kind(SpiderId id, SpiderKind kind) {
  spider(id);
  spiders_[id].kind = kind;
}

void Diagram::set_phase(SpiderId id, Phase phase) {
  spider(id);
  spiders_[id].phase = phase;
}

void Diagram::set_instrument(SpiderId id, std::optional<OutcomeExpr> instrument) {
  spider(id);
  if (instrument) {
    for (auto v : instrument->vars())
      if (!vars_.count(v)) throw IntegrityError("instrument references unknown outcome var " + std::to_string(v));
  }
  spiders_[id].instrument = std::move(instrument);
}

void Diagram::set_spider_coord(SpiderId id, std::optional<Coord> c) {
  spider(id);
  spiders_[id].coord = c;
}

void Diagram::set_port_coord(PortId id, std::optional<Coord> c) {
  port(id);
  ports_[id].coord = c;
}

void Diagram::set_edge_kind(EdgeId id, EdgeKind kind) {
  edge(id);
  edges_[id].kind = kind;
}

void Diagram::reattach(EdgeId id, Endpoint from, Endpoint to) {
  const Edge& e = edge(id);
  if (!has_endpoint(to)) throw IntegrityError("edge endpoint " + to.to_string() + " does not exist");
  Edge& m = edges_[id];
  if (e.b == from) {
    m.b = to;
  } else if (e.a == from) {
    m.a = to;
  } else {
    throw IntegrityError("edge " + std::to_string(id) + " does not touch " + from.to_string());
  }
  auto& inc = incidence(from);
  inc.erase(std::find(inc.begin(), inc.end(), id));
  incidence(to).push_back(id);
}

const std::vector<EdgeId>& Diagram::incident(Endpoint e) const {
  return e.is_spider() ? spider(e.id).edges : port(e.id).edges;
}

std::vector<EdgeId>& Diagram::incidence(Endpoint e) {
  if (e.is_spider()) {
    auto it = spiders_.find(e.id);
    if (it == spiders_.end()) throw IntegrityError("unknown spider " + std::to_string(e.id));
    return it->second.edges;
  }
  auto it = ports_.find(e.id);
  if (it == ports_.end()) throw IntegrityError("unknown port " + std::to_string(e.id));
  return it->second.edges;
}

std::vector<PortId> Diagram::ports_of(PortDir dir) const {
  std::vector<PortId> out;
  for (const auto& [id, p] : ports_)
    if (p.dir == dir) out.push_back(id);
  return out;
}

bool Diagram::touches_port(SpiderId id) const {
  const Endpoint self = Endpoint::spider(id);
  for (auto e : spider(id).edges)
    if (edge(e).other(self).is_port()) return true;
  return false;
}

std::size_t Diagram::instrument_count() const {
  std::size_t n = 0;
  for (const auto& [id, s] : spiders_)
    if (s.instrument) ++n;
  return n;
}

std::vector<Violation> Diagram::validate() const {
  std::vector<Violation> out;
  std::map<Endpoint, std::multiset<EdgeId>> expected;
  for (const auto& [id, e] : edges_) {
    if (e.id != id) out.push_back({"edge record " + std::to_string(id) + " has id " + std::to_string(e.id)});
    for (Endpoint ep : {e.a, e.b}) {
      if (!has_endpoint(ep)) {
        out.push_back({"edge " + std::to_string(id) + " has dangling endpoint " + ep.to_string()});
      } else {
        expected[ep].insert(id);
      }
    }
  }
  for (const auto& [id, s] : spiders_) {
    std::multiset<EdgeId> have(s.edges.begin(), s.edges.end());
    if (have != expected[Endpoint::spider(id)])
      out.push_back({"spider " + std::to_string(id) + " incidence list is inconsistent"});
    if (s.instrument) {
      for (auto v : s.instrument->vars())
        if (!vars_.count(v))
          out.push_back({"spider " + std::to_string(id) + " references unknown outcome var " + std::to_string(v)});
    }
  }
  std::set<std::string> labels;
  for (const auto& [id, p] : ports_) {
    const auto deg = expected[Endpoint::port(id)].size();
    if (deg != 1) out.push_back({"port " + std::to_string(id) + ": port degree " + std::to_string(deg)});
    if (!p.label.empty() && !labels.insert(p.label).second)
      out.push_back({"duplicate port label '" + p.label + "'"});
  }
  for (const auto& [ep, set] : expected) {
    if (ep.is_port() && has_port(ep.id)) {
      std::multiset<EdgeId> have(ports_.at(ep.id).edges.begin(), ports_.at(ep.id).edges.end());
      if (have != set) out.push_back({"port " + std::to_string(ep.id) + " incidence list is inconsistent"});
    }
  }
  return out;
}

void Diagram::reserve_ids(int spider, int edge, int port, int var) {
  next_spider_ = std::max(next_spider_, spider);
  next_edge_ = std::max(next_edge_, edge);
  next_port_ = std::max(next_port_, port);
  next_var_ = std::max(next_var_, var);
}

std::vector<std::pair<EdgeId, EdgeKind>> remove_self_loops(Diagram& d, SpiderId s) {
  std::vector<std::pair<EdgeId, EdgeKind>> removed;
  std::vector<EdgeId> inc = d.spider(s).edges;
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  for (auto id : inc) {
    const Edge& e = d.edge(id);
    if (!e.is_loop()) continue;
    const EdgeKind k = e.kind;
    if (k == EdgeKind::Hadamard) d.set_phase(s, d.spider(s).phase + Phase::pi());
    d.remove_edge(id);
    removed.emplace_back(id, k);
  }
  return removed;
}

}  // namespace zxft
