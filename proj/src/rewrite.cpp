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

#include "zxft/rewrite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"

namespace zxft {

namespace {

const std::vector<std::pair<Rule, const char*>> kRuleNames = {
    {Rule::Fuse, "fuse"},
    {Rule::Split, "split"},
    {Rule::ColorFlip, "color_flip"},
    {Rule::RemoveIdentity, "remove_identity"},
    {Rule::InsertIdentity, "insert_identity"},
    {Rule::RemoveLoops, "remove_loops"},
    {Rule::AttachInstrument, "attach_instrument"},
    {Rule::DetachInstrument, "detach_instrument"},
};

std::vector<EdgeId> unique_edges(const Spider& s) {
  std::vector<EdgeId> v = s.edges;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

EdgeEnd end_at(const Diagram& d, EdgeId e, Endpoint at) {
  const Edge& ed = d.edge(e);
  return {e, ed.b == at && ed.a != at && ed.kind == EdgeKind::Hadamard};
}

Highlight seen(const PauliWeb& w, const EdgeEnd& end) {
  const Highlight h = w.get(end.edge);
  return end.swap ? h.swapped() : h;
}

bool own_color(SpiderKind k, Highlight h) { return k == SpiderKind::Z ? h.g : h.r; }
bool opposite_color(SpiderKind k, Highlight h) { return k == SpiderKind::Z ? h.r : h.g; }

void drop_loops(PauliWeb& w, const RewriteStep& st) {
  for (const auto& [e, k] : st.loops) w.edges.erase(e);
}

}  // namespace

std::string to_string(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

Rule rule_from_string(const std::string& s) {
  for (const auto& [rule, name] : kRuleNames)
    if (s == name) return rule;
  throw ParseError("rule", "unknown rewrite rule '" + s + "'");
}

RewriteStep fuse(Diagram& d, SpiderId s1, SpiderId s2) {
  if (s1 == s2) throw RuleNotApplicable("fuse needs two distinct spiders");
  const Spider& a = d.spider(s1);
  const Spider& b = d.spider(s2);
  if (a.kind != b.kind) throw RuleNotApplicable("fuse needs spiders of the same kind");
  const Endpoint ea = Endpoint::spider(s1), eb = Endpoint::spider(s2);
  EdgeId link = -1;
  for (auto e : unique_edges(a)) {
    const Edge& ed = d.edge(e);
    if (ed.touches(eb) && ed.kind == EdgeKind::Plain) {
      link = e;
      break;
    }
  }
  if (link < 0) throw RuleNotApplicable("fuse needs a plain edge between the spiders");
  RewriteStep st;
  st.rule = Rule::Fuse;
  st.spider = s1;
  st.other = s2;
  st.edge = link;
  st.kind = a.kind;
  st.instrument_a = a.instrument.has_value();
  st.instrument_b = b.instrument.has_value();

  const Phase phase = a.phase + b.phase;
  std::optional<OutcomeExpr> inst = a.instrument;
  if (b.instrument) inst = inst ? *inst ^ *b.instrument : *b.instrument;
  d.remove_edge(link);
  for (auto e : unique_edges(d.spider(s2))) {
    if (d.edge(e).is_loop()) d.reattach(e, eb, ea);
    d.reattach(e, eb, ea);
  }
  d.remove_spider(s2);
  d.set_phase(s1, phase);
  d.set_instrument(s1, inst);
  st.loops = remove_self_loops(d, s1);
  return st;
}

RewriteStep split(Diagram& d, SpiderId s, const std::vector<EdgeId>& moved, bool instrument_to_new) {
  const Spider& sp = d.spider(s);
  const Endpoint self = Endpoint::spider(s);
  std::set<EdgeId> ms(moved.begin(), moved.end());
  if (ms.empty()) throw RuleNotApplicable("split: moved group is empty");
  if (ms.size() != moved.size()) throw RuleNotApplicable("split: duplicate edge in moved group");
  for (auto e : moved) {
    if (!d.has_edge(e) || !d.edge(e).touches(self)) throw RuleNotApplicable("split: edge " + std::to_string(e) + " is not incident to the spider");
    if (d.edge(e).is_loop()) throw RuleNotApplicable("split: cannot move a self-loop");
  }
  if (ms.size() >= sp.edges.size()) throw RuleNotApplicable("split: kept group is empty");
  RewriteStep st;
  st.rule = Rule::Split;
  st.spider = s;
  st.moved = moved;
  st.flag = instrument_to_new;
  st.kind = sp.kind;
  for (auto e : moved) st.ends.push_back(end_at(d, e, self));

  const Phase phase = sp.phase;
  const auto inst = sp.instrument;
  const auto coord = sp.coord;
  const SpiderId t = d.add_spider(sp.kind, instrument_to_new ? phase : Phase{});
  if (instrument_to_new) {
    d.set_phase(s, Phase{});
    d.set_instrument(s, std::nullopt);
    d.set_instrument(t, inst);
  }
  d.set_spider_coord(t, coord);
  for (auto e : moved) d.reattach(e, self, Endpoint::spider(t));
  st.other = t;
  st.created.push_back(d.add_edge(self, Endpoint::spider(t), EdgeKind::Plain));
  return st;
}

RewriteStep color_flip(Diagram& d, SpiderId s) {
  const Spider& sp = d.spider(s);
  const Endpoint self = Endpoint::spider(s);
  RewriteStep st;
  st.rule = Rule::ColorFlip;
  st.spider = s;
  st.kind = sp.kind;
  for (auto e : unique_edges(sp)) {
    const Edge& ed = d.edge(e);
    if (ed.a == self) st.flipped_a.push_back(e);
    if (!ed.is_loop()) d.set_edge_kind(e, toggled(ed.kind));
  }
  d.set_kind(s, flipped(sp.kind));
  return st;
}

RewriteStep remove_identity(Diagram& d, SpiderId s) {
  const Spider& sp = d.spider(s);
  if (sp.edges.size() != 2) throw RuleNotApplicable("remove_identity: spider has degree " + std::to_string(sp.edges.size()));
  if (!sp.phase.is_zero()) throw RuleNotApplicable("remove_identity: spider has a nonzero phase");
  if (sp.instrument) throw RuleNotApplicable("remove_identity: spider has an outcome port");
  const EdgeId e1 = sp.edges[0], e2 = sp.edges[1];
  if (e1 == e2) throw RuleNotApplicable("remove_identity: spider only carries a self-loop");
  const Endpoint self = Endpoint::spider(s);
  const Endpoint u = d.edge(e1).other(self);
  const Endpoint v = d.edge(e2).other(self);
  RewriteStep st;
  st.rule = Rule::RemoveIdentity;
  st.spider = s;
  st.kind = sp.kind;
  st.ends = {end_at(d, e1, u), end_at(d, e2, v)};
  const EdgeKind k = d.edge(e1).kind ^ d.edge(e2).kind;
  d.remove_spider(s);
  st.created.push_back(d.add_edge(u, v, k));
  if (u == v && u.is_spider()) st.loops = remove_self_loops(d, u.id);
  return st;
}

RewriteStep insert_identity(Diagram& d, EdgeId e, SpiderKind kind) {
  const Edge ed = d.edge(e);
  RewriteStep st;
  st.rule = Rule::InsertIdentity;
  st.edge = e;
  st.kind = kind;
  st.ends.push_back({e, ed.kind == EdgeKind::Hadamard});
  std::optional<Coord> ca, cb;
  if (ed.a.is_spider()) ca = d.spider(ed.a.id).coord;
  if (ed.a.is_port()) ca = d.port(ed.a.id).coord;
  if (ed.b.is_spider()) cb = d.spider(ed.b.id).coord;
  if (ed.b.is_port()) cb = d.port(ed.b.id).coord;
  d.remove_edge(e);
  const SpiderId s = d.add_spider(kind);
  if (ca && cb) d.set_spider_coord(s, Coord{((*ca)[0] + (*cb)[0]) / 2, ((*ca)[1] + (*cb)[1]) / 2, ((*ca)[2] + (*cb)[2]) / 2});
  st.spider = s;
  st.created.push_back(d.add_edge(ed.a, Endpoint::spider(s), ed.kind));
  st.created.push_back(d.add_edge(Endpoint::spider(s), ed.b, EdgeKind::Plain));
  return st;
}

RewriteStep remove_loops(Diagram& d, SpiderId s) {
  RewriteStep st;
  st.rule = Rule::RemoveLoops;
  st.spider = s;
  st.kind = d.spider(s).kind;
  st.loops = remove_self_loops(d, s);
  if (st.loops.empty()) throw RuleNotApplicable("remove_loops: spider has no self-loop");
  return st;
}

RewriteStep attach_instrument(Diagram& d, SpiderId s, const std::string& label) {
  const Spider& sp = d.spider(s);
  if (sp.instrument) throw RuleNotApplicable("attach_instrument: spider already has an outcome port");
  RewriteStep st;
  st.rule = Rule::AttachInstrument;
  st.spider = s;
  st.kind = sp.kind;
  st.label = label.empty() ? "b@s" + std::to_string(s) : label;
  if (!sp.edges.empty()) st.ends.push_back(end_at(d, sp.edges.front(), Endpoint::spider(s)));
  st.var = d.add_outcome_var(st.label);
  st.expr = OutcomeExpr::var(st.var);
  d.set_instrument(s, st.expr);
  return st;
}

RewriteStep detach_instrument(Diagram& d, SpiderId s) {
  const Spider& sp = d.spider(s);
  if (!sp.instrument) throw RuleNotApplicable("detach_instrument: spider has no outcome port");
  RewriteStep st;
  st.rule = Rule::DetachInstrument;
  st.spider = s;
  st.kind = sp.kind;
  st.expr = sp.instrument;
  d.set_instrument(s, std::nullopt);
  return st;
}

RewriteStep apply(Diagram& d, const RewriteStep& step) {
  RewriteStep got;
  switch (step.rule) {
    case Rule::Fuse:
      got = fuse(d, step.spider, step.other);
      break;
    case Rule::Split:
      got = split(d, step.spider, step.moved, step.flag);
      break;
    case Rule::ColorFlip:
      got = color_flip(d, step.spider);
      break;
    case Rule::RemoveIdentity:
      got = remove_identity(d, step.spider);
      break;
    case Rule::InsertIdentity:
      got = insert_identity(d, step.edge, step.kind);
      break;
    case Rule::RemoveLoops:
      got = remove_loops(d, step.spider);
      break;
    case Rule::AttachInstrument:
      got = attach_instrument(d, step.spider, step.label);
      break;
    case Rule::DetachInstrument:
      got = detach_instrument(d, step.spider);
      break;
  }
  if (!(got == step)) throw IntegrityError("replay of " + to_string(step.rule) + " produced different ids");
  return got;
}

Diagram replay(Diagram d, const RewriteTrace& trace) {
  for (const auto& st : trace.steps) apply(d, st);
  return d;
}

PauliWeb transport_web(const PauliWeb& in, const RewriteStep& st) {
  PauliWeb w = in;
  switch (st.rule) {
    case Rule::Fuse: {
      w.edges.erase(st.edge);
      drop_loops(w, st);
      const bool inc = w.included.erase(st.spider) + w.included.erase(st.other) > 0;
      if (inc && (st.instrument_a || st.instrument_b)) w.included.insert(st.spider);
      break;
    }
    case Rule::Split: {
      const bool own = own_color(st.kind, seen(w, st.ends.front()));
      bool parity = false;
      for (const auto& e : st.ends) parity ^= opposite_color(st.kind, seen(w, e));
      const Highlight bridge = st.kind == SpiderKind::Z ? Highlight{parity, own} : Highlight{own, parity};
      w.set(st.created.front(), bridge);
      if (st.flag && w.included.erase(st.spider)) w.included.insert(st.other);
      break;
    }
    case Rule::ColorFlip:
      for (auto e : st.flipped_a) w.set(e, w.get(e).swapped());
      break;
    case Rule::RemoveIdentity: {
      const Highlight v = seen(w, st.ends.front());
      w.edges.erase(st.ends[0].edge);
      w.edges.erase(st.ends[1].edge);
      w.set(st.created.front(), v);
      drop_loops(w, st);
      break;
    }
    case Rule::InsertIdentity: {
      const Highlight v = w.get(st.edge);
      w.edges.erase(st.edge);
      // The replaced edge's kind is carried by the first created edge; the
      // second one is plain and sees the value from the new spider's side.
      w.set(st.created[0], v);
      w.set(st.created[1], st.ends.front().swap ? v.swapped() : v);
      break;
    }
    case Rule::RemoveLoops:
      drop_loops(w, st);
      break;
    case Rule::AttachInstrument:
      if (!st.ends.empty() && own_color(st.kind, seen(w, st.ends.front()))) {
        w.included.insert(st.spider);
        w.sign ^= *st.expr;
      }
      break;
    case Rule::DetachInstrument:
      if (w.included.erase(st.spider)) w.sign ^= *st.expr;
      break;
  }
  return w;
}

PauliWeb transport_web(const Diagram& pre, const PauliWeb& w, const RewriteStep& st) {
  const auto v = verify(w, pre);
  if (!v.empty()) throw ContractViolation("web is not valid before " + to_string(st.rule) + ": " + v.front());
  return transport_web(w, st);
}

PauliWeb transport_web(const PauliWeb& w, const RewriteTrace& trace) {
  PauliWeb out = w;
  for (const auto& st : trace.steps) out = transport_web(out, st);
  return out;
}

namespace {

bool is_identity_spider(const Spider& s) {
  return s.edges.size() == 2 && s.edges[0] != s.edges[1] && s.phase.is_zero() && !s.instrument;
}

bool has_loop(const Diagram& d, const Spider& s) {
  for (auto e : s.edges)
    if (d.edge(e).is_loop()) return true;
  return false;
}

}  // namespace

std::pair<Diagram, RewriteTrace> to_canonical(Diagram d, const CanonicalOptions& opt) {
  RewriteTrace trace;
  std::mt19937_64 rng(opt.shuffle_seed.value_or(0));
  auto order = [&](std::vector<int> ids) {
    if (opt.shuffle_seed) std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
  };

  std::vector<int> ids;
  for (const auto& [id, s] : d.spiders()) ids.push_back(id);
  for (auto id : order(ids)) {
    if (has_loop(d, d.spider(id))) trace.steps.push_back(remove_loops(d, id));
  }
  ids.clear();
  for (const auto& [id, s] : d.spiders())
    if (s.kind == SpiderKind::X) ids.push_back(id);
  for (auto id : order(ids)) trace.steps.push_back(color_flip(d, id));

  for (;;) {
    // Candidates: plain edges between distinct spiders (encoded as edge id)
    // and identity spiders (encoded as -1 - spider id).
    std::vector<int> cand;
    for (const auto& [id, e] : d.edges()) {
      if (e.kind == EdgeKind::Plain && e.a.is_spider() && e.b.is_spider() && !e.is_loop()) {
        cand.push_back(id);
        if (!opt.shuffle_seed) break;
      }
    }
    if (cand.empty() || opt.shuffle_seed) {
      for (const auto& [id, s] : d.spiders()) {
        if (is_identity_spider(s)) {
          cand.push_back(-1 - id);
          if (!opt.shuffle_seed) break;
        }
      }
    }
    if (cand.empty()) break;
    const int pick = opt.shuffle_seed ? cand[rng() % cand.size()] : cand.front();
    if (pick >= 0) {
      const Edge& e = d.edge(pick);
      const SpiderId a = std::min(e.a.id, e.b.id), b = std::max(e.a.id, e.b.id);
      trace.steps.push_back(fuse(d, a, b));
    } else {
      trace.steps.push_back(remove_identity(d, -1 - pick));
    }
  }
  return {std::move(d), std::move(trace)};
}

bool is_canonical(const Diagram& d) {
  for (const auto& [id, s] : d.spiders()) {
    if (s.kind != SpiderKind::Z || is_identity_spider(s) || has_loop(d, s)) return false;
  }
  for (const auto& [id, e] : d.edges()) {
    if (e.kind == EdgeKind::Plain && e.a.is_spider() && e.b.is_spider()) return false;
  }
  return true;
}

namespace {

using nlohmann::json;

json expr_json(const std::optional<OutcomeExpr>& e) {
  if (!e) return nullptr;
  return {{"vars", e->vars()}, {"const", e->konst() ? 1 : 0}};
}

std::optional<OutcomeExpr> expr_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return OutcomeExpr(j.at("vars").get<std::vector<VarId>>(), j.at("const").get<int>() != 0);
}

}  // namespace

std::string trace_to_json(const RewriteTrace& t, int indent) {
  json steps = json::array();
  for (const auto& st : t.steps) {
    json ends = json::array();
    for (const auto& e : st.ends) ends.push_back({e.edge, e.swap});
    json loops = json::array();
    for (const auto& [e, k] : st.loops) loops.push_back({e, to_string(k)});
    steps.push_back({{"rule", to_string(st.rule)},
                     {"spider", st.spider},
                     {"other", st.other},
                     {"edge", st.edge},
                     {"moved", st.moved},
                     {"flag", st.flag},
                     {"kind", to_string(st.kind)},
                     {"created", st.created},
                     {"ends", ends},
                     {"loops", loops},
                     {"flipped_a", st.flipped_a},
                     {"instrument_a", st.instrument_a},
                     {"instrument_b", st.instrument_b},
                     {"var", st.var},
                     {"expr", expr_json(st.expr)},
                     {"label", st.label}});
  }
  return json{{"format", "zxft-trace/1"}, {"steps", steps}}.dump(indent < 0 ? -1 : indent);
}

RewriteTrace trace_from_json(const std::string& text) {
  RewriteTrace t;
  try {
    const json j = json::parse(text);
    for (const auto& s : j.at("steps")) {
      RewriteStep st;
      st.rule = rule_from_string(s.at("rule").get<std::string>());
      st.spider = s.at("spider").get<int>();
      st.other = s.at("other").get<int>();
      st.edge = s.at("edge").get<int>();
      st.moved = s.at("moved").get<std::vector<EdgeId>>();
      st.flag = s.at("flag").get<bool>();
      st.kind = s.at("kind").get<std::string>() == "Z" ? SpiderKind::Z : SpiderKind::X;
      st.created = s.at("created").get<std::vector<EdgeId>>();
      for (const auto& e : s.at("ends")) st.ends.push_back({e[0].get<int>(), e[1].get<bool>()});
      for (const auto& l : s.at("loops"))
        st.loops.emplace_back(l[0].get<int>(), l[1].get<std::string>() == "h" ? EdgeKind::Hadamard : EdgeKind::Plain);
      st.flipped_a = s.at("flipped_a").get<std::vector<EdgeId>>();
      st.instrument_a = s.at("instrument_a").get<bool>();
      st.instrument_b = s.at("instrument_b").get<bool>();
      st.var = s.at("var").get<int>();
      st.expr = expr_from(s.at("expr"));
      st.label = s.at("label").get<std::string>();
      t.steps.push_back(std::move(st));
    }
  } catch (const json::exception& e) {
    throw ParseError("steps", std::string("malformed trace: ") + e.what());
  }
  return t;
}

}  // namespace zxft
