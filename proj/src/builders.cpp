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

#include "zxft/builders.hpp"

#include <algorithm>
#include <functional>

namespace zxft {

namespace {

using S = Endpoint;
constexpr SpiderKind kZ = SpiderKind::Z;
constexpr SpiderKind kX = SpiderKind::X;
constexpr EdgeKind kPlain = EdgeKind::Plain;
constexpr EdgeKind kH = EdgeKind::Hadamard;

PortId in_port(Diagram& d, int k) { return d.add_port(PortDir::In, "in" + std::to_string(k)); }
PortId out_port(Diagram& d, int k) { return d.add_port(PortDir::Out, "out" + std::to_string(k)); }

void link(Diagram& d, SpiderId a, SpiderId b, EdgeKind k = kPlain) { d.add_edge(S::spider(a), S::spider(b), k); }
void link_in(Diagram& d, int k, SpiderId s, EdgeKind kind = kPlain) {
  d.add_edge(S::port(in_port(d, k)), S::spider(s), kind);
}
void link_out(Diagram& d, SpiderId s, int k, EdgeKind kind = kPlain) {
  d.add_edge(S::spider(s), S::port(out_port(d, k)), kind);
}

SpiderId instrument(Diagram& d, SpiderKind kind, const std::string& label) {
  const VarId v = d.add_outcome_var(label);
  return d.add_spider(kind, Phase{}, OutcomeExpr::var(v));
}

// One-leg state or effect. Computational basis states are X spiders, X basis
// states Z spiders, Y basis states Z spiders with a quarter turn.
Diagram one_leg(char basis, int bit, bool effect) {
  Diagram d;
  SpiderId s;
  if (basis == 'z') {
    s = d.add_spider(kX, Phase(2 * bit));
  } else if (basis == 'x') {
    s = d.add_spider(kZ, Phase(2 * bit));
  } else {
    s = d.add_spider(kZ, Phase(bit ? 3 : 1));
  }
  if (effect) {
    link_in(d, 0, s);
  } else {
    link_out(d, s, 0);
  }
  return d;
}

// n wire spiders of `wire` kind joined to one instrument of the other kind.
Diagram parity_measurement(int n, SpiderKind wire) {
  Diagram d;
  std::vector<SpiderId> w;
  for (int k = 0; k < n; ++k) {
    w.push_back(d.add_spider(wire));
    link_in(d, k, w.back());
    link_out(d, w.back(), k);
  }
  const SpiderId m = instrument(d, flipped(wire), "b");
  for (auto s : w) link(d, s, m);
  return d;
}

const std::vector<std::string> kGadgets = {
    "prep_z0", "prep_z1", "prep_x0", "prep_x1", "prep_y0", "prep_y1", "proj_z0", "proj_z1",
    "proj_x0", "proj_x1", "proj_y0", "proj_y1", "meas_z",  "meas_x",  "cnot",    "cz",
    "z_rot1",  "z_rot2",  "z_rot3",  "zz_meas", "xx_meas", "yy_meas", "bell_meas", "w4_z_meas",
    "w4_x_meas", "zz_meas_circuit", "ghz_circuit", "ring6_circuit"};

}  // namespace

std::vector<std::string> gadget_names() { return kGadgets; }

Diagram gadget(const std::string& name) {
  if (name.size() == 7 && (name.rfind("prep_", 0) == 0 || name.rfind("proj_", 0) == 0)) {
    const char basis = name[5];
    const int bit = name[6] - '0';
    if ((basis == 'x' || basis == 'y' || basis == 'z') && (bit == 0 || bit == 1))
      return one_leg(basis, bit, name[1] == 'r' && name[2] == 'o' && name[3] == 'j');
  }
  Diagram d;
  if (name == "meas_z" || name == "meas_x") {
    link_in(d, 0, instrument(d, name == "meas_z" ? kX : kZ, "b"));
    return d;
  }
  if (name == "cnot" || name == "cz") {
    const SpiderId c = d.add_spider(kZ);
    const SpiderId t = d.add_spider(kX);
    const EdgeKind k = name == "cz" ? kH : kPlain;
    link_in(d, 0, c);
    link_out(d, c, 0);
    link_in(d, 1, t, k);
    link_out(d, t, 1, k);
    link(d, c, t);
    return d;
  }
  if (name.rfind("z_rot", 0) == 0 && name.size() == 6) {
    const int q = name[5] - '0';
    if (q >= 1 && q <= 3) {
      const SpiderId s = d.add_spider(kZ, Phase(q));
      link_in(d, 0, s);
      link_out(d, s, 0);
      return d;
    }
  }
  if (name == "zz_meas") return parity_measurement(2, kZ);
  if (name == "xx_meas") return parity_measurement(2, kX);
  if (name == "w4_z_meas") return parity_measurement(4, kZ);
  if (name == "w4_x_meas") return parity_measurement(4, kX);
  if (name == "yy_meas") {
    // Each wire passes a Z spider and an X spider; the instrument sees the Z
    // spiders through Hadamard edges and the X spiders directly. The pi phase
    // makes outcome 0 the +1 eigenspace of YY.
    const SpiderId m = instrument(d, kZ, "b");
    d.set_phase(m, Phase::pi());
    for (int k = 0; k < 2; ++k) {
      const SpiderId z = d.add_spider(kZ);
      const SpiderId x = d.add_spider(kX);
      link_in(d, k, z);
      link(d, z, x);
      link_out(d, x, k);
      link(d, m, z, kH);
      link(d, m, x);
    }
    return d;
  }
  if (name == "bell_meas") {
    const SpiderId a = instrument(d, kZ, "bXX");
    const SpiderId b = instrument(d, kX, "bZZ");
    link_in(d, 0, a);
    link(d, a, b);
    link_in(d, 1, b);
    return d;
  }
  if (name == "zz_meas_circuit") {
    // Ancilla prepared in |0>, two CNOTs onto it, then a Z measurement.
    const SpiderId prep = d.add_spider(kX);
    const SpiderId t1 = d.add_spider(kX);
    const SpiderId t2 = d.add_spider(kX);
    const SpiderId meas = instrument(d, kX, "b");
    link(d, prep, t1);
    link(d, t1, t2);
    link(d, t2, meas);
    for (int k = 0; k < 2; ++k) {
      const SpiderId c = d.add_spider(kZ);
      link_in(d, k, c);
      link_out(d, c, k);
      link(d, c, k == 0 ? t1 : t2);
    }
    return d;
  }
  if (name == "ghz_circuit") {
    // |+> on qubit 0, |0> on qubits 1 and 2, then CNOT(0,1) and CNOT(1,2).
    const SpiderId p0 = d.add_spider(kZ);
    const SpiderId p1 = d.add_spider(kX);
    const SpiderId p2 = d.add_spider(kX);
    const SpiderId c01 = d.add_spider(kZ);
    const SpiderId t01 = d.add_spider(kX);
    const SpiderId c12 = d.add_spider(kZ);
    const SpiderId t12 = d.add_spider(kX);
    link(d, p0, c01);
    link(d, p1, t01);
    link(d, c01, t01);
    link(d, t01, c12);
    link(d, p2, t12);
    link(d, c12, t12);
    link_out(d, c01, 0);
    link_out(d, c12, 1);
    link_out(d, t12, 2);
    return d;
  }
  if (name == "ring6_circuit") {
    // |+> on six qubits followed by CZ(j, j+1); each CZ is a pair of Z
    // spiders joined by a Hadamard edge.
    std::vector<SpiderId> cur(6);
    for (int k = 0; k < 6; ++k) cur[k] = d.add_spider(kZ);
    for (int k = 0; k < 6; ++k) {
      const int l = (k + 1) % 6;
      const SpiderId a = d.add_spider(kZ);
      const SpiderId b = d.add_spider(kZ);
      link(d, cur[k], a);
      link(d, cur[l], b);
      link(d, a, b, kH);
      cur[k] = a;
      cur[l] = b;
    }
    for (int k = 0; k < 6; ++k) link_out(d, cur[k], k);
    return d;
  }
  throw ContractViolation("unknown gadget '" + name + "'");
}

Diagram graph_state(int n, const std::vector<std::pair<int, int>>& edges) {
  Diagram d;
  std::vector<SpiderId> v;
  for (int k = 0; k < n; ++k) {
    v.push_back(d.add_spider(kZ));
    d.add_edge(S::spider(v.back()), S::port(d.add_port(PortDir::Out, "q" + std::to_string(k))));
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw ContractViolation("graph_state needs a simple graph");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw ContractViolation("graph_state: repeated edge");
    link(d, v[a], v[b], kH);
  }
  return d;
}

Diagram rep_code(int rounds) {
  if (rounds < 1) throw ContractViolation("rep_code needs at least one round");
  Diagram d;
  SpiderId prev[2] = {-1, -1};
  for (int r = 0; r < rounds; ++r) {
    SpiderId w[2];
    for (int k = 0; k < 2; ++k) {
      w[k] = d.add_spider(kZ);
      if (r == 0) {
        link_in(d, k, w[k]);
      } else {
        link(d, prev[k], w[k]);
      }
    }
    const SpiderId m = instrument(d, kX, "b" + std::to_string(r + 1));
    link(d, w[0], m);
    link(d, w[1], m);
    prev[0] = w[0];
    prev[1] = w[1];
  }
  link_out(d, prev[0], 0);
  link_out(d, prev[1], 1);
  return d;
}

namespace {

Coord to_coord(const Point& p) { return {double(p[0]), double(p[1]), double(p[2])}; }

std::string point_string(const Point& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
}

// Direction of a neighbour: axis and sign.
struct Dir {
  int axis;
  int sign;
  bool operator<(const Dir& o) const { return std::tie(axis, sign) < std::tie(o.axis, o.sign); }
  bool operator==(const Dir&) const = default;
};

Point step(const Point& p, Dir d) {
  Point q = p;
  q[d.axis] += d.sign;
  return q;
}

// Shared lattice scaffolding: spiders per point (possibly split into halves),
// lattice edges between the halves facing each other, and ports on the first
// and last layer of every data qubit.
struct LatticeBuilder {
  PatchGeometry g;
  Diagram d;
  LatticeMeta meta;
  std::map<std::pair<Point, Dir>, SpiderId> half;

  LatticeBuilder(Flavor f, const PatchSpec& spec) : g(spec) {
    meta.flavor = f;
    meta.spec = spec;
  }

  std::string qubit_label(const Point& p) const {
    const int K = 2 * g.spec().d - 1;
    const int i = (p[0] + p[1] - K) / 2;
    const int j = (p[0] - p[1] + K) / 2;
    return "q(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  bool port_adjacent(const Point& p) const {
    return g.is_data(p) && (p[2] == g.first_z() || p[2] == g.last_z());
  }

  // Neighbour directions present at p, including the port direction.
  std::vector<Dir> dirs(const Point& p) const {
    std::vector<Dir> out;
    for (int a = 0; a < 3; ++a)
      for (int s : {-1, 1}) {
        const Dir dir{a, s};
        if (g.has(step(p, dir))) out.push_back(dir);
      }
    if (g.is_data(p) && p[2] == g.first_z()) out.push_back({2, -1});
    if (g.is_data(p) && p[2] == g.last_z()) out.push_back({2, 1});
    std::sort(out.begin(), out.end());
    return out;
  }

  SpiderId spider(const Point& p, SpiderKind k, std::optional<OutcomeExpr> inst = {}) {
    const SpiderId s = d.add_spider(k, Phase{}, std::move(inst));
    d.set_spider_coord(s, to_coord(p));
    meta.point[s] = p;
    return s;
  }

  SpiderId slot_instrument(const Point& p, SpiderKind k, const std::string& kind, const std::string& label) {
    const VarId v = d.add_outcome_var(label);
    meta.slots[v] = {kind, p, g.round_of(p[2])};
    return spider(p, k, OutcomeExpr::var(v));
  }

  void assign(const Point& p, const std::vector<Dir>& ds, SpiderId s) {
    for (auto dir : ds) half[{p, dir}] = s;
  }

  void lattice_edges(EdgeKind kind) {
    for (const auto& p : g.points())
      for (int a = 0; a < 3; ++a) {
        const Point q = step(p, {a, 1});
        if (!g.has(q)) continue;
        d.add_edge(S::spider(half.at({p, {a, 1}})), S::spider(half.at({q, {a, -1}})), kind);
      }
  }

  void ports(EdgeKind in_kind, EdgeKind out_kind) {
    std::vector<Point> firsts, lasts;
    for (const auto& p : g.points()) {
      if (!g.is_data(p)) continue;
      if (p[2] == g.first_z()) firsts.push_back(p);
      if (p[2] == g.last_z()) lasts.push_back(p);
    }
    auto by_label = [&](const Point& a, const Point& b) { return qubit_label(a) < qubit_label(b); };
    std::sort(firsts.begin(), firsts.end(), by_label);
    std::sort(lasts.begin(), lasts.end(), by_label);
    for (const auto& p : firsts) {
      const PortId port = d.add_port(PortDir::In, "in/" + qubit_label(p));
      d.set_port_coord(port, Coord{double(p[0]), double(p[1]), double(p[2] - 1)});
      d.add_edge(S::port(port), S::spider(half.at({p, {2, -1}})), in_kind);
    }
    for (const auto& p : lasts) {
      const PortId port = d.add_port(PortDir::Out, "out/" + qubit_label(p));
      d.set_port_coord(port, Coord{double(p[0]), double(p[1]), double(p[2] + 1)});
      d.add_edge(S::spider(half.at({p, {2, 1}})), S::port(port), out_kind);
    }
    for (const auto& p : g.points()) {
      if (!g.is_data(p)) continue;
      meta.worldlines[qubit_label(p)].push_back(half.at({p, dirs(p).front()}));
    }
  }

  std::pair<Diagram, LatticeMeta> finish() { return {std::move(d), std::move(meta)}; }
};

SpiderKind parity_kind(const Point& p) { return PatchGeometry::odd_count(p) == 1 ? kZ : kX; }

}  // namespace

std::pair<Diagram, LatticeMeta> cbqc(const PatchSpec& spec) {
  LatticeBuilder b(Flavor::CBQC, spec);
  for (const auto& p : b.g.points()) {
    const SpiderKind k = parity_kind(p);
    SpiderId s;
    if (b.g.is_data(p)) {
      s = b.spider(p, k);
    } else {
      // X-spider ancillas measure Z-type stabilizers and vice versa.
      const std::string type = k == kX ? "Z" : "X";
      s = b.slot_instrument(p, k, type, type + "@" + point_string(p));
    }
    b.assign(p, b.dirs(p), s);
  }
  b.lattice_edges(kPlain);
  b.ports(kPlain, kPlain);
  return b.finish();
}

std::pair<Diagram, LatticeMeta> mbqc(const PatchSpec& spec) {
  LatticeBuilder b(Flavor::MBQC, spec);
  for (const auto& p : b.g.points()) {
    const SpiderId s = b.port_adjacent(p) ? b.spider(p, kZ) : b.slot_instrument(p, kZ, "M", "M@" + point_string(p));
    b.assign(p, b.dirs(p), s);
  }
  b.lattice_edges(kH);
  b.ports(kPlain, kH);
  return b.finish();
}

std::pair<Diagram, LatticeMeta> fbqc(const PatchSpec& spec) {
  LatticeBuilder b(Flavor::FBQC, spec);
  for (const auto& p : b.g.points()) {
    const auto ds = b.dirs(p);
    if (b.port_adjacent(p)) {
      b.assign(p, ds, b.spider(p, kZ));
      continue;
    }
    // Resource-state halves: {+a, +b} and {-a, -b} for the point's two axes.
    std::vector<Dir> plus, minus;
    for (auto dir : ds) (dir.sign > 0 ? plus : minus).push_back(dir);
    if (plus.empty() || minus.empty()) {
      b.assign(p, ds, b.slot_instrument(p, kZ, "M", "M@" + point_string(p)));
      continue;
    }
    const SpiderId hp = b.spider(p, kZ);
    const SpiderId hm = b.spider(p, kZ);
    const SpiderId zz = b.slot_instrument(p, kX, "ZZ", "bZZ@" + point_string(p));
    const SpiderId xx = b.slot_instrument(p, kZ, "XX", "bXX@" + point_string(p));
    b.meta.gadget_spiders.insert({zz, xx});
    link(b.d, hp, zz);
    link(b.d, zz, xx);
    link(b.d, xx, hm);
    b.assign(p, plus, hp);
    b.assign(p, minus, hm);
  }
  b.lattice_edges(kH);
  b.ports(kPlain, kH);
  return b.finish();
}

namespace {

std::pair<std::vector<Dir>, std::vector<Dir>> chain_halves(const Point& p, const std::vector<Dir>& ds) {
  std::vector<Dir> h1, h2;
  for (auto dir : ds) (chain_first_half(p, dir.axis, dir.sign) ? h1 : h2).push_back(dir);
  return {h1, h2};
}

}  // namespace

bool chain_first_half(const Point& p, int axis, int sign) {
  static const int next[3] = {2, 0, 1};
  const auto ax = PatchGeometry::axes(p);
  const int u = next[ax[0]] == ax[1] ? ax[0] : ax[1];
  return (axis == u && sign < 0) || (axis == next[u] && sign > 0);
}

std::pair<Diagram, LatticeMeta> flobqc(const PatchSpec& spec) {
  LatticeBuilder b(Flavor::FloBQC, spec);
  for (const auto& p : b.g.points()) {
    const auto ds = b.dirs(p);
    const SpiderKind k = parity_kind(p);
    const auto [h1, h2] = chain_halves(p, ds);
    if (h1.empty() || h2.empty()) {
      b.assign(p, ds, b.spider(p, k));
      continue;
    }
    const SpiderId a = b.spider(p, k);
    const SpiderId c = k == kZ ? b.slot_instrument(p, kX, "ZZ", "bZZ@" + point_string(p))
                               : b.slot_instrument(p, kZ, "XX", "bXX@" + point_string(p));
    const SpiderId t = b.spider(p, k);
    b.meta.gadget_spiders.insert(c);
    link(b.d, a, c);
    link(b.d, c, t);
    b.assign(p, h1, a);
    b.assign(p, h2, t);
  }
  b.lattice_edges(kPlain);
  b.ports(kPlain, kPlain);
  return b.finish();
}

std::pair<Diagram, LatticeMeta> build(Flavor f, const PatchSpec& spec) {
  switch (f) {
    case Flavor::CBQC:
      return cbqc(spec);
    case Flavor::MBQC:
      return mbqc(spec);
    case Flavor::FBQC:
      return fbqc(spec);
    case Flavor::FloBQC:
      return flobqc(spec);
  }
  throw ContractViolation("unknown flavor");
}

}  // namespace zxft
