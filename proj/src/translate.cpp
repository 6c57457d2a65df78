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

#include "zxft/translate.hpp"

#include <algorithm>
#include <set>

namespace zxft {

namespace {

std::string point_string(const Point& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
}

WebMap transport_basis(const Diagram& source, const RewriteTrace& trace) {
  WebMap m;
  const WebBasis b = web_basis(source);
  m.source_outer = b.outer;
  m.source_checks = b.checks;
  m.source_checks.insert(m.source_checks.end(), b.null.begin(), b.null.end());
  for (const auto& w : m.source_outer) m.outer.push_back(transport_web(w, trace));
  for (const auto& w : m.source_checks) m.checks.push_back(transport_web(w, trace));
  return m;
}

struct Neighbour {
  EdgeId edge;
  int axis;
  int sign;
};

// Lattice direction of every edge at s, from the points of its endpoints.
// Port edges point along z: inputs below, outputs above.
std::vector<Neighbour> neighbours(const Diagram& d, const LatticeMeta& meta, SpiderId s) {
  std::vector<Neighbour> out;
  const Point p = meta.point.at(s);
  const Endpoint self = Endpoint::spider(s);
  for (auto e : d.spider(s).edges) {
    const Endpoint o = d.edge(e).other(self);
    if (o.is_port()) {
      out.push_back({e, 2, d.port(o.id).dir == PortDir::In ? -1 : 1});
      continue;
    }
    const Point q = meta.point.at(o.id);
    int axis = -1, sign = 0, dist = 0;
    for (int a = 0; a < 3; ++a) {
      if (q[a] != p[a]) {
        axis = a;
        sign = q[a] > p[a] ? 1 : -1;
        dist += std::abs(q[a] - p[a]);
      }
    }
    if (dist != 1) throw ContractViolation("edge " + std::to_string(e) + " is not a lattice edge");
    out.push_back({e, axis, sign});
  }
  return out;
}

Translation start(const Diagram& d, const LatticeMeta& meta, Flavor to) {
  Translation t;
  t.source = d;
  t.source_meta = meta;
  t.diagram = d;
  t.meta = meta;
  t.meta.flavor = to;
  return t;
}

void expect_flavor(const LatticeMeta& meta, Flavor f) {
  if (meta.flavor != f) throw ContractViolation("translation expects a " + to_string(f) + " lattice, got " + to_string(meta.flavor));
}

}  // namespace

Translation cbqc_to_mbqc(const Diagram& d, const LatticeMeta& meta) {
  expect_flavor(meta, Flavor::CBQC);
  Translation t = start(d, meta, Flavor::MBQC);
  auto [canon, trace] = to_canonical(d);
  t.diagram = std::move(canon);
  t.trace = std::move(trace);
  for (auto& [v, slot] : t.meta.slots) slot.kind = "M";
  std::vector<SpiderId> ids;
  for (const auto& [id, s] : t.diagram.spiders()) ids.push_back(id);
  for (auto id : ids) {
    const Spider& s = t.diagram.spider(id);
    if (s.instrument || t.diagram.touches_port(id)) continue;
    const Point p = t.meta.point.at(id);
    const RewriteStep st = attach_instrument(t.diagram, id, "M@" + point_string(p));
    t.meta.slots[st.var] = {"M", p, PatchGeometry(meta.spec).round_of(p[2])};
    t.trace.steps.push_back(st);
  }
  t.map = transport_basis(d, t.trace);
  return t;
}

Translation mbqc_to_fbqc(const Diagram& d, const LatticeMeta& meta) {
  expect_flavor(meta, Flavor::MBQC);
  Translation t = start(d, meta, Flavor::FBQC);
  const PatchGeometry g(meta.spec);
  std::vector<SpiderId> ids;
  for (const auto& [id, s] : d.spiders()) ids.push_back(id);
  Diagram& out = t.diagram;
  for (auto s : ids) {
    if (out.touches_port(s)) continue;
    std::vector<EdgeId> minus;
    std::size_t plus = 0;
    for (const auto& n : neighbours(out, t.meta, s)) {
      if (n.sign < 0) {
        minus.push_back(n.edge);
      } else {
        ++plus;
      }
    }
    if (minus.empty() || plus == 0) continue;
    const Point p = t.meta.point.at(s);
    const RewriteStep a = split(out, s, minus);
    const RewriteStep b = split(out, s, {a.created.front()}, true);
    const RewriteStep c = insert_identity(out, b.created.front(), SpiderKind::X);
    const RewriteStep e = attach_instrument(out, c.spider, "bZZ@" + point_string(p));
    for (SpiderId x : {a.other, b.other, c.spider}) {
      t.meta.point[x] = p;
      out.set_spider_coord(x, Coord{double(p[0]), double(p[1]), double(p[2])});
    }
    t.meta.gadget_spiders.insert({b.other, c.spider});
    for (const auto& v : out.spider(b.other).instrument->vars()) t.meta.slots[v].kind = "XX";
    t.meta.slots[e.var] = {"ZZ", p, g.round_of(p[2])};
    for (const auto& st : {a, b, c, e}) t.trace.steps.push_back(st);
  }
  t.map = transport_basis(d, t.trace);
  return t;
}

Translation cbqc_to_flobqc(const Diagram& d, const LatticeMeta& meta) {
  expect_flavor(meta, Flavor::CBQC);
  Translation t = start(d, meta, Flavor::FloBQC);
  const PatchGeometry g(meta.spec);
  Diagram& out = t.diagram;
  std::vector<SpiderId> ids;
  for (const auto& [id, s] : d.spiders()) ids.push_back(id);
  for (auto s : ids) {
    if (!out.spider(s).instrument) continue;
    for (auto v : out.spider(s).instrument->vars()) t.meta.slots.erase(v);
    t.trace.steps.push_back(detach_instrument(out, s));
  }
  for (auto s : ids) {
    const Point p = t.meta.point.at(s);
    std::vector<EdgeId> second;
    std::size_t first = 0;
    for (const auto& n : neighbours(out, t.meta, s)) {
      if (chain_first_half(p, n.axis, n.sign)) {
        ++first;
      } else {
        second.push_back(n.edge);
      }
    }
    if (second.empty() || first == 0) continue;
    const SpiderKind k = out.spider(s).kind;
    const RewriteStep a = split(out, s, second);
    const RewriteStep b = insert_identity(out, a.created.front(), flipped(k));
    const std::string kind = k == SpiderKind::Z ? "ZZ" : "XX";
    const RewriteStep c = attach_instrument(out, b.spider, "b" + kind + "@" + point_string(p));
    for (SpiderId x : {a.other, b.spider}) {
      t.meta.point[x] = p;
      out.set_spider_coord(x, Coord{double(p[0]), double(p[1]), double(p[2])});
    }
    t.meta.gadget_spiders.insert(b.spider);
    t.meta.slots[c.var] = {kind, p, g.round_of(p[2])};
    for (const auto& st : {a, b, c}) t.trace.steps.push_back(st);
  }
  t.map = transport_basis(d, t.trace);
  return t;
}

Translation identity_translation(const Diagram& d, const LatticeMeta& meta) {
  Translation t = start(d, meta, meta.flavor);
  t.map = transport_basis(d, t.trace);
  return t;
}

Translation translate(Flavor to, const Diagram& d, const LatticeMeta& meta) {
  switch (to) {
    case Flavor::CBQC:
      return identity_translation(d, meta);
    case Flavor::MBQC:
      return cbqc_to_mbqc(d, meta);
    case Flavor::FBQC: {
      const Translation m = cbqc_to_mbqc(d, meta);
      Translation f = mbqc_to_fbqc(m.diagram, m.meta);
      RewriteTrace all = m.trace;
      all.append(f.trace);
      f.source = d;
      f.source_meta = meta;
      f.trace = all;
      f.map = transport_basis(d, f.trace);
      return f;
    }
    case Flavor::FloBQC:
      return cbqc_to_flobqc(d, meta);
  }
  throw ContractViolation("unknown flavor");
}

int CellCheck::outcomes() const {
  int n = 0;
  for (const auto& [k, c] : kinds) n += c;
  return n;
}

std::vector<CellCheck> cell_checks(const Diagram& d, const LatticeMeta& meta) {
  const PatchGeometry g(meta.spec);
  const WebCoder coder(d);
  const gf2::BitMatrix full = constraints(d, coder);
  std::vector<std::vector<std::size_t>> row_ones;
  row_ones.reserve(full.rows());
  for (std::size_t r = 0; r < full.rows(); ++r) row_ones.push_back(full[r].ones());
  const std::size_t base = 2 * coder.edge_ids().size();

  std::vector<CellCheck> out;
  for (const Cell& cell : cells(g)) {
    const auto pts = cell.points();
    const std::set<Point> in(pts.begin(), pts.end());
    auto inside = [&](const Endpoint& e) {
      if (!e.is_spider()) return false;
      auto it = meta.point.find(e.id);
      return it != meta.point.end() && in.count(it->second);
    };
    std::vector<int> compact(coder.size(), -1);
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < coder.edge_ids().size(); ++k) {
      const Edge& e = d.edge(coder.edge_ids()[k]);
      if (!inside(e.a) || !inside(e.b)) continue;
      for (std::size_t c : {2 * k, 2 * k + 1}) {
        compact[c] = static_cast<int>(cols.size());
        cols.push_back(c);
      }
    }
    for (std::size_t k = 0; k < coder.instruments().size(); ++k) {
      if (!inside(Endpoint::spider(coder.instruments()[k]))) continue;
      compact[base + k] = static_cast<int>(cols.size());
      cols.push_back(base + k);
    }
    gf2::BitMatrix m(cols.size());
    for (const auto& ones : row_ones) {
      gf2::BitVec row(cols.size());
      bool any = false;
      for (auto c : ones) {
        if (compact[c] >= 0) {
          row.set(static_cast<std::size_t>(compact[c]));
          any = true;
        }
      }
      if (any) m.add_row(std::move(row));
    }
    const auto ns = gf2::nullspace(m);
    std::vector<gf2::BitVec> basis;
    for (const auto& v : ns) {
      gf2::BitVec w(coder.size());
      for (auto c : v.ones()) w.set(cols[c]);
      basis.push_back(std::move(w));
    }
    CellCheck cc;
    cc.cell = cell;
    std::optional<std::pair<std::size_t, std::size_t>> best_key;
    auto consider = [&](const gf2::BitVec& v) {
      PauliWeb w = coder.decode(v);
      if (w.sign.vars().empty()) return;
      const std::pair<std::size_t, std::size_t> key{w.sign.vars().size(), w.edges.size()};
      if (!best_key || key < *best_key) {
        best_key = key;
        cc.web = std::move(w);
      }
    };
    if (basis.size() <= 12) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << basis.size()); ++mask) {
        gf2::BitVec v(coder.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
          if ((mask >> i) & 1u) v ^= basis[i];
        consider(v);
      }
    } else {
      for (const auto& v : basis) consider(v);
    }
    if (cc.web) {
      for (auto v : cc.web->sign.vars()) {
        auto it = meta.slots.find(v);
        ++cc.kinds[it == meta.slots.end() ? "?" : it->second.kind];
      }
      bool touches_port = false;
      for (const auto& [e, h] : cc.web->edges) {
        const Edge& ed = d.edge(e);
        if (ed.a.is_port() || ed.b.is_port()) touches_port = true;
      }
      // Cells reaching the first or last layer of a data worldline sit on the
      // open time boundary.
      bool time_boundary = false;
      for (const auto& p : pts)
        if (g.is_data(p) && (p[2] == g.first_z() || p[2] == g.last_z())) time_boundary = true;
      cc.interior = complete(g, cell) && !time_boundary && !touches_port;
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<std::map<std::string, int>> expected_cell_kinds(Flavor f) {
  switch (f) {
    case Flavor::CBQC:
      return {{{"Z", 2}}, {{"X", 2}}};
    case Flavor::MBQC:
      return {{{"M", 6}}};
    case Flavor::FBQC:
      return {{{"XX", 6}, {"ZZ", 6}}};
    case Flavor::FloBQC:
      return {{{"ZZ", 6}}, {{"XX", 6}}};
  }
  return {};
}

namespace {

std::string kinds_string(const std::map<std::string, int>& k) {
  std::string s;
  for (const auto& [name, n] : k) s += (s.empty() ? "" : ",") + name + ":" + std::to_string(n);
  return s.empty() ? "none" : s;
}

std::size_t zero_outer_rank(const Diagram& d, const WebCoder& c, const std::vector<PauliWeb>& webs) {
  std::vector<PauliWeb> z;
  for (const auto& w : webs)
    if (outer_is_identity(outer_signature(d, w))) z.push_back(w);
  return span_rank(c, z);
}

}  // namespace

CorrespondenceReport check_correspondence(const Translation& t) {
  CorrespondenceReport r;
  const Diagram& d = t.diagram;
  const WebMap& m = t.map;
  if (m.outer.size() != m.source_outer.size() || m.checks.size() != m.source_checks.size())
    r.failures.push_back("web map is not a bijection on the listed bases");
  auto check_one = [&](const PauliWeb& src, const PauliWeb& dst, const char* what) {
    ++r.webs_checked;
    const auto v = verify(dst, d);
    if (!v.empty()) r.failures.push_back(std::string("transported ") + what + " web invalid: " + v.front());
    if (signature_string(t.source, outer_signature(t.source, src)) != signature_string(d, outer_signature(d, dst)))
      r.failures.push_back(std::string("transported ") + what + " web changed its outer signature");
  };
  for (std::size_t i = 0; i < std::min(m.outer.size(), m.source_outer.size()); ++i) check_one(m.source_outer[i], m.outer[i], "outer");
  for (std::size_t i = 0; i < std::min(m.checks.size(), m.source_checks.size()); ++i) check_one(m.source_checks[i], m.checks[i], "check");

  const WebCoder src_coder(t.source), dst_coder(d);
  std::vector<PauliWeb> src_all = m.source_outer, dst_all = m.outer;
  src_all.insert(src_all.end(), m.source_checks.begin(), m.source_checks.end());
  dst_all.insert(dst_all.end(), m.checks.begin(), m.checks.end());
  r.source_rank = gf2::nullspace(constraints(t.source, src_coder)).size();
  r.target_rank = gf2::nullspace(constraints(d, dst_coder)).size();
  const std::size_t mapped = span_rank(dst_coder, dst_all);
  if (span_rank(src_coder, src_all) != r.source_rank || mapped != r.target_rank || r.source_rank != r.target_rank)
    r.failures.push_back("rank mismatch: source " + std::to_string(r.source_rank) + ", mapped " + std::to_string(mapped) +
                         ", target " + std::to_string(r.target_rank));
  const WebBasis native = web_basis(d);
  std::vector<PauliWeb> native_zero = native.checks;
  native_zero.insert(native_zero.end(), native.null.begin(), native.null.end());
  r.zero_outer_source = zero_outer_rank(d, dst_coder, dst_all);
  r.zero_outer_target = span_rank(dst_coder, native_zero);
  if (r.zero_outer_source != r.zero_outer_target)
    r.failures.push_back("rank mismatch on checks: mapped " + std::to_string(r.zero_outer_source) + ", native " +
                         std::to_string(r.zero_outer_target));

  const auto expected = expected_cell_kinds(t.meta.flavor);
  for (const auto& cc : cell_checks(d, t.meta)) {
    if (!cc.interior) continue;
    ++r.interior_cells;
    ++r.table[kinds_string(cc.kinds)];
    if (std::find(expected.begin(), expected.end(), cc.kinds) == expected.end())
      r.failures.push_back("interior cell at " + point_string(cc.cell.center) + " has outcomes " + kinds_string(cc.kinds));
  }
  return r;
}

}  // namespace zxft
