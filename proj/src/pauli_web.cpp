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

#include "zxft/pauli_web.hpp"

#include <algorithm>

namespace zxft {

using gf2::BitMatrix;
using gf2::BitVec;

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case '1':
    case '_':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
  }
  throw ParseError("", std::string("not a Pauli: '") + c + "'");
}

namespace {

Pauli to_pauli(Highlight h) {
  if (h.r && h.g) return Pauli::Y;
  if (h.r) return Pauli::Z;
  if (h.g) return Pauli::X;
  return Pauli::I;
}

Highlight from_pauli(Pauli p) {
  switch (p) {
    case Pauli::I:
      return {};
    case Pauli::X:
      return {false, true};
    case Pauli::Y:
      return {true, true};
    case Pauli::Z:
      return {true, false};
  }
  return {};
}

// One entry per edge end at a spider; a self-loop contributes its A end and
// its B end.
struct End {
  EdgeId edge;
  bool at_b;
  bool hadamard;
};

std::vector<End> spider_ends(const Diagram& d, SpiderId s) {
  std::vector<End> out;
  const Endpoint self = Endpoint::spider(s);
  std::set<EdgeId> seen_loop;
  for (auto id : d.spider(s).edges) {
    const Edge& e = d.edge(id);
    bool at_b;
    if (e.is_loop()) {
      at_b = !seen_loop.insert(id).second;
    } else {
      at_b = e.b == self;
    }
    out.push_back({id, at_b, e.kind == EdgeKind::Hadamard});
  }
  return out;
}

// Index of the red / green variable seen at an edge end.
std::size_t red_var(const WebCoder& c, const End& e) {
  const bool swap = e.at_b && e.hadamard;
  return 2 * c.edge_index(e.edge) + (swap ? 1 : 0);
}
std::size_t green_var(const WebCoder& c, const End& e) {
  const bool swap = e.at_b && e.hadamard;
  return 2 * c.edge_index(e.edge) + (swap ? 0 : 1);
}

Highlight end_value(const PauliWeb& w, const End& e) {
  const Highlight h = w.get(e.edge);
  return (e.at_b && e.hadamard) ? h.swapped() : h;
}

void check_phase(const Spider& s) {
  if (!s.phase.is_pauli())
    throw UnsupportedPhase(s.id, "spider " + std::to_string(s.id) + " has phase " + std::to_string(s.phase.quarter) +
                                     "/2 pi; Pauli webs need phase 0 or pi");
}

// Own-color indicator: green for Z spiders, red for X spiders, read at the
// first end. Degree-zero spiders have indicator 0.
bool own_color(const PauliWeb& w, const Spider& s, const std::vector<End>& ends) {
  if (ends.empty()) return false;
  const Highlight h = end_value(w, ends.front());
  return s.kind == SpiderKind::Z ? h.g : h.r;
}

}  // namespace

Highlight PauliWeb::get(EdgeId e) const {
  auto it = edges.find(e);
  return it == edges.end() ? Highlight{} : it->second;
}

void PauliWeb::set(EdgeId e, Highlight h) {
  if (h.none()) {
    edges.erase(e);
  } else {
    edges[e] = h;
  }
}

Highlight PauliWeb::at(const Diagram& d, EdgeId e, Endpoint end) const {
  const Edge& ed = d.edge(e);
  const Highlight h = get(e);
  if (ed.a == end) return h;
  if (ed.b == end) return ed.kind == EdgeKind::Hadamard ? h.swapped() : h;
  throw ContractViolation("edge " + std::to_string(e) + " does not touch " + end.to_string());
}

OuterSignature outer_signature(const Diagram& d, const PauliWeb& w) {
  OuterSignature out;
  for (const auto& [id, p] : d.ports()) {
    out[id] = p.edges.empty() ? Pauli::I : to_pauli(w.at(d, p.edges.front(), Endpoint::port(id)));
  }
  return out;
}

bool outer_is_identity(const OuterSignature& s) {
  return std::all_of(s.begin(), s.end(), [](const auto& kv) { return kv.second == Pauli::I; });
}

std::string signature_string(const Diagram& d, const OuterSignature& s) {
  std::string in = "in:", out = "out:";
  for (const auto& [id, p] : d.ports()) {
    auto it = s.find(id);
    const char c = it == s.end() ? 'I' : to_char(it->second);
    (p.dir == PortDir::In ? in : out) += c;
  }
  return in + "|" + out;
}

OuterSignature parse_signature(const Diagram& d, const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.rfind("in:", 0) != 0 || text.compare(bar + 1, 4, "out:") != 0)
    throw ParseError("signature", "expected 'in:...|out:...'");
  const std::string in = text.substr(3, bar - 3);
  const std::string out = text.substr(bar + 5);
  const auto ins = d.ports_of(PortDir::In);
  const auto outs = d.ports_of(PortDir::Out);
  if (in.size() != ins.size() || out.size() != outs.size())
    throw ParseError("signature", "length does not match the port count");
  OuterSignature s;
  for (std::size_t i = 0; i < ins.size(); ++i) s[ins[i]] = pauli_from_char(in[i]);
  for (std::size_t i = 0; i < outs.size(); ++i) s[outs[i]] = pauli_from_char(out[i]);
  return s;
}

WebCoder::WebCoder(const Diagram& d) : d_(&d) {
  for (const auto& [id, e] : d.edges()) {
    edge_index_[id] = edge_ids_.size();
    edge_ids_.push_back(id);
  }
  for (const auto& [id, s] : d.spiders()) {
    if (!s.instrument) continue;
    instrument_index_[id] = instruments_.size();
    instruments_.push_back(id);
  }
}

BitVec WebCoder::encode(const PauliWeb& w) const {
  BitVec v(size());
  for (const auto& [e, h] : w.edges) {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw ContractViolation("web highlights unknown edge " + std::to_string(e));
    v.set(2 * it->second, h.r);
    v.set(2 * it->second + 1, h.g);
  }
  for (auto s : w.included) {
    auto it = instrument_index_.find(s);
    if (it == instrument_index_.end()) throw ContractViolation("web includes non-instrument spider " + std::to_string(s));
    v.set(2 * edge_ids_.size() + it->second);
  }
  return v;
}

PauliWeb WebCoder::decode(const BitVec& v) const {
  PauliWeb w;
  for (std::size_t i = 0; i < edge_ids_.size(); ++i) w.set(edge_ids_[i], {v.get(2 * i), v.get(2 * i + 1)});
  for (std::size_t i = 0; i < instruments_.size(); ++i)
    if (v.get(2 * edge_ids_.size() + i)) w.included.insert(instruments_[i]);
  w.sign = zxft::sign(w, *d_);
  return w;
}

BitMatrix constraints(const Diagram& d) { return constraints(d, WebCoder(d)); }

BitMatrix constraints(const Diagram& d, const WebCoder& coder) {
  BitMatrix m(coder.size());
  for (const auto& [id, s] : d.spiders()) {
    check_phase(s);
    const auto ends = spider_ends(d, id);
    const bool z = s.kind == SpiderKind::Z;
    // Opposite color: even count. Own color: all or none.
    if (!ends.empty()) {
      BitVec& parity = m.new_row();
      for (const auto& e : ends) parity.flip(z ? red_var(coder, e) : green_var(coder, e));
    }
    for (std::size_t i = 1; i < ends.size(); ++i) {
      BitVec& eq = m.new_row();
      eq.flip(z ? green_var(coder, ends[0]) : red_var(coder, ends[0]));
      eq.flip(z ? green_var(coder, ends[i]) : red_var(coder, ends[i]));
    }
    if (s.instrument) {
      BitVec& inc = m.new_row();
      inc.flip(2 * coder.edge_ids().size() + coder.instrument_index(id));
      if (!ends.empty()) inc.flip(z ? green_var(coder, ends[0]) : red_var(coder, ends[0]));
    }
  }
  return m;
}

OutcomeExpr sign(const PauliWeb& w, const Diagram& d) {
  OutcomeExpr out;
  for (const auto& [id, s] : d.spiders()) {
    const bool pi = s.phase.quarter == 2;
    if (pi && own_color(w, s, spider_ends(d, id))) out ^= true;
  }
  for (const auto& [e, h] : w.edges) {
    if (d.edge(e).kind == EdgeKind::Hadamard && h.r && h.g) out ^= true;
  }
  for (auto s : w.included) {
    const auto& sp = d.spider(s);
    if (sp.instrument) out ^= *sp.instrument;
  }
  return out;
}

std::vector<std::string> verify(const PauliWeb& w, const Diagram& d) {
  std::vector<std::string> out;
  for (const auto& [e, h] : w.edges) {
    if (!d.has_edge(e)) out.push_back("highlight on unknown edge " + std::to_string(e));
  }
  for (auto s : w.included) {
    if (!d.has_spider(s) || !d.spider(s).instrument) out.push_back("inclusion on non-instrument spider " + std::to_string(s));
  }
  if (!out.empty()) return out;
  for (const auto& [id, s] : d.spiders()) {
    if (!s.phase.is_pauli()) {
      out.push_back("spider " + std::to_string(id) + " has a non-Pauli phase");
      continue;
    }
    const auto ends = spider_ends(d, id);
    const bool z = s.kind == SpiderKind::Z;
    const char* opp = z ? "red" : "green";
    const char* own = z ? "green" : "red";
    bool parity = false;
    bool mixed = false;
    for (const auto& e : ends) {
      const Highlight h = end_value(w, e);
      parity ^= z ? h.r : h.g;
      if ((z ? h.g : h.r) != (z ? end_value(w, ends[0]).g : end_value(w, ends[0]).r)) mixed = true;
    }
    if (parity) out.push_back(std::string("odd ") + opp + " count at spider " + std::to_string(id));
    if (mixed) out.push_back(std::string("partial ") + own + " highlight at spider " + std::to_string(id));
    const bool inc = w.included.count(id) != 0;
    if (s.instrument && inc != own_color(w, s, ends))
      out.push_back("outcome inclusion inconsistent at spider " + std::to_string(id));
  }
  if (out.empty() && w.sign != sign(w, d)) out.push_back("sign mismatch: stored " + w.sign.to_string() + ", expected " + sign(w, d).to_string());
  return out;
}

PauliWeb combine(const Diagram& d, const PauliWeb& a, const PauliWeb& b) {
  PauliWeb out = a;
  for (const auto& [e, h] : b.edges) {
    if (!d.has_edge(e)) throw ContractViolation("web refers to edge " + std::to_string(e) + " not in the diagram");
    const Highlight cur = out.get(e);
    out.set(e, {cur.r != h.r, cur.g != h.g});
  }
  for (auto s : b.included) {
    if (!out.included.erase(s)) out.included.insert(s);
  }
  for (const auto& [e, h] : a.edges) {
    if (!d.has_edge(e)) throw ContractViolation("web refers to edge " + std::to_string(e) + " not in the diagram");
  }
  out.sign = sign(out, d);
  return out;
}

namespace {

// Outer bits: (r, g) at each port end, ports in id order.
BitVec outer_bits(const Diagram& d, const WebCoder& c, const BitVec& v) {
  BitVec out(2 * d.port_count());
  std::size_t i = 0;
  for (const auto& [id, p] : d.ports()) {
    const EdgeId e = p.edges.front();
    const Edge& ed = d.edge(e);
    const std::size_t k = c.edge_index(e);
    bool r = v.get(2 * k), g = v.get(2 * k + 1);
    if (ed.b == Endpoint::port(id) && ed.kind == EdgeKind::Hadamard) std::swap(r, g);
    out.set(2 * i, r);
    out.set(2 * i + 1, g);
    ++i;
  }
  return out;
}

// Outcome-variable part of the sign, over the diagram's variable ids.
BitVec sign_vars(const Diagram& d, const WebCoder& c, const BitVec& v, const std::map<VarId, std::size_t>& var_index) {
  BitVec out(var_index.size());
  const std::size_t base = 2 * c.edge_ids().size();
  for (std::size_t i = 0; i < c.instruments().size(); ++i) {
    if (!v.get(base + i)) continue;
    for (auto var : d.spider(c.instruments()[i]).instrument->vars()) out.flip(var_index.at(var));
  }
  return out;
}

std::map<VarId, std::size_t> index_vars(const Diagram& d) {
  std::map<VarId, std::size_t> m;
  for (const auto& [id, v] : d.outcome_vars()) m.emplace(id, m.size());
  return m;
}

// Echelonizes `rows` on the leading `key` bits of each augmented row
// (key || payload). Rows whose key reduces to zero are returned in `rest`.
void split_by_key(std::vector<std::pair<BitVec, BitVec>>& rows, std::vector<BitVec>& keep,
                  std::vector<BitVec>& rest) {
  std::vector<std::size_t> pivot_of;
  std::vector<std::pair<BitVec, BitVec>> basis;
  for (auto& [key, payload] : rows) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (key.get(pivot_of[i])) {
        key ^= basis[i].first;
        payload ^= basis[i].second;
      }
    }
    if (key.none()) {
      rest.push_back(payload);
      continue;
    }
    const std::size_t p = key.first();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].first.get(p)) {
        basis[i].first ^= key;
        basis[i].second ^= payload;
      }
    }
    basis.emplace_back(key, payload);
    pivot_of.push_back(p);
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_of[a] < pivot_of[b]; });
  for (auto i : order) keep.push_back(basis[i].second);
}

}  // namespace

WebBasis web_basis(const Diagram& d) {
  const WebCoder coder(d);
  const auto sols = gf2::nullspace(constraints(d, coder));
  const auto var_index = index_vars(d);

  std::vector<std::pair<BitVec, BitVec>> rows;
  for (const auto& v : sols) rows.emplace_back(outer_bits(d, coder, v), v);
  std::vector<BitVec> outer, zero_outer;
  split_by_key(rows, outer, zero_outer);

  std::vector<std::pair<BitVec, BitVec>> rows2;
  for (const auto& v : zero_outer) rows2.emplace_back(sign_vars(d, coder, v, var_index), v);
  std::vector<BitVec> checks, null;
  split_by_key(rows2, checks, null);

  WebBasis b;
  for (const auto& v : outer) b.outer.push_back(coder.decode(v));
  for (const auto& v : checks) b.checks.push_back(coder.decode(v));
  for (const auto& v : null) b.null.push_back(coder.decode(v));
  return b;
}

std::optional<PauliWeb> find_web(const Diagram& d, const OuterSignature& target, bool outcome_free) {
  const WebCoder coder(d);
  const auto sols = gf2::nullspace(constraints(d, coder));
  const auto var_index = index_vars(d);
  const std::size_t nport = 2 * d.port_count();
  const std::size_t rows = nport + (outcome_free ? var_index.size() : 0);
  // Unknowns: one coefficient per solution vector.
  BitMatrix a(rows, sols.size());
  for (std::size_t j = 0; j < sols.size(); ++j) {
    const BitVec ob = outer_bits(d, coder, sols[j]);
    for (auto i : ob.ones()) a[i].set(j);
    if (outcome_free) {
      const BitVec sv = sign_vars(d, coder, sols[j], var_index);
      for (auto i : sv.ones()) a[nport + i].set(j);
    }
  }
  BitVec rhs(rows);
  std::size_t i = 0;
  for (const auto& [id, p] : d.ports()) {
    auto it = target.find(id);
    const Highlight h = it == target.end() ? Highlight{} : from_pauli(it->second);
    rhs.set(2 * i, h.r);
    rhs.set(2 * i + 1, h.g);
    ++i;
  }
  const auto c = gf2::solve(a, rhs);
  if (!c) return std::nullopt;
  BitVec v(coder.size());
  for (auto j : c->ones()) v ^= sols[j];
  return coder.decode(v);
}

std::size_t span_rank(const WebCoder& coder, const std::vector<PauliWeb>& webs) {
  std::vector<BitVec> vs;
  vs.reserve(webs.size());
  for (const auto& w : webs) vs.push_back(coder.encode(w));
  return gf2::rank(vs);
}

}  // namespace zxft
