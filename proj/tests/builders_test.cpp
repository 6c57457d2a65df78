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

#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "zxft/error.hpp"
#include "zxft/oracle.hpp"
#include "zxft/pauli_web.hpp"
#include "zxft/rewrite.hpp"

namespace zxft {
namespace {

using testing::operator_tensor;
using testing::projector;

std::size_t count_kind(const LatticeMeta& m, const std::string& kind) {
  return std::count_if(m.slots.begin(), m.slots.end(), [&](const auto& s) { return s.second.kind == kind; });
}

TEST(Gadget, UnknownName) { EXPECT_THROW(gadget("toffoli"), Error); }

TEST(Gadget, ZzMeasurementIsThreeSpiders) {
  const Diagram d = gadget("zz_meas");
  EXPECT_EQ(d.spiders().size(), 3u);
  EXPECT_EQ(d.instrument_count(), 1u);
}

struct Projection {
  std::string gadget;
  std::string pauli;
};

void PrintTo(const Projection& p, std::ostream* os) { *os << p.gadget; }

class MeasurementGadget : public ::testing::TestWithParam<Projection> {};

TEST_P(MeasurementGadget, OutcomeSelectsEigenspace) {
  const auto& [name, pauli] = GetParam();
  const Diagram d = gadget(name);
  const VarId b = d.outcome_vars().begin()->first;
  const int n = static_cast<int>(pauli.size());
  for (bool bit : {false, true}) {
    const DenseTensor t = dense_contract(d, {{b, bit}});
    EXPECT_TRUE(proportional(t, operator_tensor(d, t, n, projector(pauli, bit ? -1 : 1)))) << name << " b=" << bit;
  }
}

INSTANTIATE_TEST_SUITE_P(All, MeasurementGadget,
                         ::testing::Values(Projection{"zz_meas", "ZZ"}, Projection{"xx_meas", "XX"},
                                           Projection{"yy_meas", "YY"}, Projection{"w4_z_meas", "ZZZZ"},
                                           Projection{"w4_x_meas", "XXXX"}, Projection{"zz_meas_circuit", "ZZ"}));

TEST(Gadget, SingleQubitMeasurements) {
  for (const auto& [name, ket0] : {std::pair<std::string, std::array<cplx, 2>>{"meas_z", {1, 0}},
                                   {"meas_x", {M_SQRT1_2, M_SQRT1_2}}}) {
    const Diagram d = gadget(name);
    const DenseTensor t = dense_contract(d, {{d.outcome_vars().begin()->first, false}});
    EXPECT_TRUE(proportional(t, DenseTensor{t.ports, {ket0[0], ket0[1]}})) << name;
  }
}

TEST(Gadget, PreparationsAndRotations) {
  const cplx i(0, 1);
  const std::map<std::string, std::array<cplx, 2>> states = {
      {"prep_z0", {1, 0}}, {"prep_z1", {0, 1}}, {"prep_x0", {1, 1}},
      {"prep_x1", {1, -1}}, {"prep_y0", {1, i}}, {"prep_y1", {1, -i}}};
  for (const auto& [name, v] : states) {
    const DenseTensor t = dense_contract(gadget(name));
    EXPECT_TRUE(proportional(t, DenseTensor{t.ports, {v[0], v[1]}})) << name;
    const std::string proj = "proj" + name.substr(4);
    const DenseTensor p = dense_contract(gadget(proj));
    EXPECT_TRUE(proportional(p, DenseTensor{p.ports, {v[0], v[1]}})) << proj;
  }
  for (int q = 1; q <= 3; ++q) {
    const Diagram d = gadget("z_rot" + std::to_string(q));
    const DenseTensor t = dense_contract(d);
    const auto rz = [q](unsigned out, unsigned in) {
      return out != in ? cplx(0) : (in == 0 ? cplx(1) : std::polar(1.0, q * M_PI / 2));
    };
    EXPECT_TRUE(proportional(t, operator_tensor(d, t, 1, rz))) << q;
  }
}

TEST(Gadget, CnotAndCz) {
  const Diagram cnot = gadget("cnot");
  const DenseTensor t = dense_contract(cnot);
  // Qubit 0 is the control and the most significant bit.
  const auto cx = [](unsigned out, unsigned in) { return out == (in & 2 ? in ^ 1u : in) ? 1.0 : 0.0; };
  EXPECT_TRUE(proportional(t, operator_tensor(cnot, t, 2, cx)));
  const Diagram cz = gadget("cz");
  const DenseTensor u = dense_contract(cz);
  const auto czf = [](unsigned out, unsigned in) { return out == in ? (in == 3 ? -1.0 : 1.0) : 0.0; };
  EXPECT_TRUE(proportional(u, operator_tensor(cz, u, 2, czf)));
  EXPECT_FALSE(equivalent(cnot, cz));
}

TEST(Gadget, BellMeasurementWebs) {
  const Diagram d = gadget("bell_meas");
  ASSERT_EQ(d.outcome_vars().size(), 2u);
  std::map<std::string, VarId> var;
  for (const auto& [v, info] : d.outcome_vars()) var[info.label] = v;
  const auto xx = find_web(d, parse_signature(d, "in:XX|out:"));
  const auto zz = find_web(d, parse_signature(d, "in:ZZ|out:"));
  ASSERT_TRUE(xx && zz);
  EXPECT_EQ(xx->sign, OutcomeExpr::var(var.at("bXX")));
  EXPECT_EQ(zz->sign, OutcomeExpr::var(var.at("bZZ")));
  EXPECT_TRUE(verify_clifford(*xx, d));
  EXPECT_TRUE(verify_clifford(*zz, d));
}

TEST(GraphState, SingleVertexIsPlus) {
  const Diagram d = graph_state(1, {});
  const auto b = web_basis(d);
  ASSERT_EQ(b.outer.size(), 1u);
  EXPECT_EQ(signature_string(d, outer_signature(d, b.outer[0])), "in:|out:X");
}

TEST(GraphState, PathOfThree) {
  const Diagram d = graph_state(3, {{0, 1}, {1, 2}});
  for (const std::string s : {"XZI", "ZXZ", "IZX"}) {
    const auto w = find_web(d, parse_signature(d, "in:|out:" + s));
    ASSERT_TRUE(w.has_value()) << s;
    EXPECT_TRUE(w->sign.is_zero());
    EXPECT_TRUE(verify_clifford(*w, d));
  }
}

TEST(GraphState, SixCycleMatchesRingCircuit) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < 6; ++k) edges.push_back({k, (k + 1) % 6});
  const Diagram g = graph_state(6, edges);
  Diagram ring = gadget("ring6_circuit");
  EXPECT_EQ(web_basis(g).outer.size(), 6u);
  // Port labels differ ("q<k>" vs "out<k>"); compare canonical shapes.
  EXPECT_EQ(to_canonical(g).first.edges().size(), to_canonical(ring).first.edges().size());
}

TEST(Cbqc, SmallPatchCounts) {
  const auto [d, m] = cbqc({2, 3, true});
  EXPECT_EQ(m.worldlines.size(), 4u);
  EXPECT_EQ(d.instrument_count(), 9u);
  EXPECT_EQ(d.port_count(), 8u);
  EXPECT_EQ(d.spiders().size(), 33u);
  EXPECT_EQ(d.edges().size(), 52u);
  EXPECT_TRUE(d.valid());
}

TEST(Cbqc, DistanceFiveCounts) {
  const auto [d, m] = cbqc({5, 2, true});
  EXPECT_EQ(m.worldlines.size(), 25u);
  EXPECT_EQ(d.instrument_count(), 48u);
  EXPECT_EQ(count_kind(m, "Z"), 24u);
  EXPECT_EQ(count_kind(m, "X"), 24u);
  const PatchGeometry g(m.spec);
  std::size_t z4 = 0, z2 = 0;
  for (const auto& p : g.plaquettes())
    if (p.type == 'Z') (p.data.size() == 4 ? z4 : z2)++;
  EXPECT_EQ(z4, 8u);
  EXPECT_EQ(z2, 4u);
}

TEST(Cbqc, OneRoundHasEightPorts) {
  const auto [d, m] = cbqc({2, 1, true});
  EXPECT_TRUE(d.valid());
  EXPECT_EQ(d.port_count(), 8u);
}

TEST(Cbqc, MeasurementOrderOption) {
  const auto zf = cbqc({3, 2, true});
  const auto xf = cbqc({3, 2, false});
  EXPECT_NE(fingerprint(zf.first), fingerprint(xf.first));
  EXPECT_EQ(web_basis(xf.first).checks.size(), web_basis(zf.first).checks.size());
}

TEST(PatchSpec, Invalid) {
  EXPECT_THROW(check_spec({1, 2, true}), Error);
  EXPECT_THROW(check_spec({3, 0, true}), Error);
  EXPECT_THROW(cbqc({1, 1, true}), Error);
}

TEST(Builders, SlotsCoverEveryInstrument) {
  for (Flavor f : {Flavor::CBQC, Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC}) {
    const auto [d, m] = build(f, {3, 2, true});
    EXPECT_TRUE(d.valid()) << to_string(f);
    std::set<VarId> used;
    for (const auto& [id, s] : d.spiders()) {
      EXPECT_TRUE(s.phase.is_pauli());
      if (s.instrument)
        for (VarId v : s.instrument->vars()) EXPECT_TRUE(used.insert(v).second);
    }
    EXPECT_EQ(used.size(), m.slots.size()) << to_string(f);
    for (VarId v : used) EXPECT_TRUE(m.slots.count(v));
  }
}

TEST(Flavor, StringRoundTrip) {
  for (Flavor f : {Flavor::CBQC, Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC})
    EXPECT_EQ(flavor_from_string(to_string(f)), f);
  EXPECT_THROW(flavor_from_string("surface"), Error);
}

TEST(Mbqc, CanonicalCbqc) {
  for (int d : {2, 3})
    for (int r : {1, 2}) {
      const auto direct = mbqc({d, r, true}).first;
      EXPECT_EQ(fingerprint(direct), fingerprint(to_canonical(cbqc({d, r, true}).first).first));
      for (const auto& [id, e] : direct.edges())
        if (e.a.is_spider() && e.b.is_spider()) EXPECT_EQ(e.kind, EdgeKind::Hadamard);
    }
}

TEST(Mbqc, OneInstrumentPerInnerSpider) {
  const auto [d, m] = mbqc({3, 2, true});
  for (const auto& [id, s] : d.spiders()) EXPECT_EQ(s.instrument.has_value(), !d.touches_port(id)) << id;
}

TEST(Fbqc, BulkResourceStatesHaveSixSpiders) {
  const auto [d, m] = fbqc({5, 3, true});
  const PatchGeometry g(m.spec);
  const auto comp = components_without_gadgets(d, m);
  std::map<int, std::size_t> size;
  std::map<int, bool> boundary;
  for (const auto& [s, c] : comp) {
    ++size[c];
    bool b = d.touches_port(s);
    const Point p = m.point.at(s);
    for (int axis : PatchGeometry::axes(p))
      for (int step : {-1, 1}) {
        Point q = p;
        q[axis] += step;
        b |= !g.has(q);
      }
    boundary[c] = boundary[c] || b;
  }
  std::size_t bulk = 0;
  for (const auto& [c, n] : size)
    if (!boundary[c]) {
      ++bulk;
      EXPECT_EQ(n, 6u);
    }
  EXPECT_GT(bulk, 0u);
}

TEST(Fbqc, SmokeSmallPatch) {
  const auto [d, m] = fbqc({2, 2, true});
  EXPECT_TRUE(d.valid());
  EXPECT_EQ(web_basis(d).outer.size(), d.port_count());
}

// Chain -> partner chain of each of its halves, ordered along the chain.
struct ChainView {
  std::map<int, std::vector<std::pair<int, std::string>>> partners;
  std::map<int, bool> port_free;
  std::map<int, std::size_t> size;
};

ChainView chain_view(const Diagram& d, const LatticeMeta& m) {
  const auto comp = components_without_gadgets(d, m);
  ChainView v;
  std::map<int, std::vector<std::pair<int, SpiderId>>> halves;
  for (const auto& [s, c] : comp) {
    const Point p = m.point.at(s);
    halves[c].push_back({p[0] + p[1] + p[2], s});
    ++v.size[c];
    v.port_free.emplace(c, true);
    if (d.touches_port(s)) v.port_free[c] = false;
  }
  for (auto& [c, hs] : halves) {
    std::sort(hs.begin(), hs.end());
    for (const auto& [key, h] : hs) {
      // Walk through the gadget attached to h.
      for (EdgeId e : d.spider(h).edges) {
        const Endpoint mid = d.edge(e).other(Endpoint::spider(h));
        if (!mid.is_spider() || !m.gadget_spiders.count(mid.id)) continue;
        std::string kind;
        if (const auto& ins = d.spider(mid.id).instrument) kind = m.slots.at(ins->vars().front()).kind;
        for (EdgeId f : d.spider(mid.id).edges) {
          const Endpoint o = d.edge(f).other(mid);
          if (o.is_spider() && o.id != h && comp.count(o.id)) v.partners[c].push_back({comp.at(o.id), kind});
        }
      }
    }
  }
  return v;
}

TEST(Flobqc, BulkChainsCycleThroughThreeNeighbours) {
  const auto [d, m] = flobqc({5, 4, true});
  const ChainView v = chain_view(d, m);
  std::size_t checked = 0;
  const auto long_chain = [&](int c) { return v.port_free.at(c) && v.size.at(c) >= 12; };
  for (const auto& [c, seq] : v.partners) {
    if (!long_chain(c)) continue;
    bool partners_long = true;
    for (const auto& [p, kind] : seq) partners_long &= long_chain(p);
    if (!partners_long) continue;
    ++checked;
    std::set<int> distinct;
    for (const auto& [p, kind] : seq) distinct.insert(p);
    EXPECT_EQ(distinct.size(), 3u) << "chain " << c;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) EXPECT_NE(seq[k].second, seq[k + 1].second);
    for (std::size_t k = 0; k + 6 < seq.size(); ++k) EXPECT_EQ(seq[k], seq[k + 6]);
  }
  EXPECT_GT(checked, 0u);
}

TEST(RepCode, Checks) {
  EXPECT_EQ(web_basis(rep_code(2)).checks.size(), 1u);
  EXPECT_EQ(web_basis(rep_code(3)).checks.size(), 2u);
  EXPECT_EQ(web_basis(rep_code(2)).outer.size(), 4u);
}

TEST(Geometry, CellsHaveEighteenPoints) {
  const PatchGeometry g({5, 3, true});
  std::size_t full = 0;
  for (const auto& c : cells(g)) {
    EXPECT_EQ(c.points().size(), 18u);
    full += complete(g, c);
  }
  EXPECT_GT(full, 0u);
  EXPECT_EQ(g.last_z() - g.first_z() + 1, 6);
}

}  // namespace
}  // namespace zxft
