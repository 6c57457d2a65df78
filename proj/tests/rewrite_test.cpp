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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zxft/builders.hpp"
#include "zxft/error.hpp"
#include "zxft/oracle.hpp"
#include "zxft/pauli_web.hpp"

namespace zxft {
namespace {

using testing::operator_tensor;

struct Pair {
  Diagram d;
  SpiderId a = -1, b = -1;
};

// Two spiders joined by one edge, each with `legs` output ports.
Pair joined(SpiderKind ka, SpiderKind kb, EdgeKind link, int legs = 2, Phase pa = {}, Phase pb = {}) {
  Pair p;
  p.a = p.d.add_spider(ka, pa);
  p.b = p.d.add_spider(kb, pb);
  int k = 0;
  for (SpiderId s : {p.a, p.b})
    for (int l = 0; l < legs; ++l)
      p.d.add_edge(Endpoint::spider(s), Endpoint::port(p.d.add_port(PortDir::Out, "q" + std::to_string(k++))));
  p.d.add_edge(Endpoint::spider(p.a), Endpoint::spider(p.b), link);
  return p;
}

TEST(Fuse, MergesTwoSpiders) {
  Pair p = joined(SpiderKind::Z, SpiderKind::Z, EdgeKind::Plain);
  const Diagram before = p.d;
  const RewriteStep st = fuse(p.d, p.a, p.b);
  EXPECT_EQ(st.rule, Rule::Fuse);
  EXPECT_EQ(p.d.spiders().size(), 1u);
  EXPECT_EQ(p.d.degree(p.a), 4u);
  EXPECT_EQ(p.d.spider(p.a).phase, Phase::zero());
  EXPECT_TRUE(equivalent(before, p.d));
}

TEST(Fuse, PhasesAdd) {
  Pair p = joined(SpiderKind::Z, SpiderKind::Z, EdgeKind::Plain, 1, Phase::pi(), Phase::pi());
  fuse(p.d, p.a, p.b);
  EXPECT_EQ(p.d.spider(p.a).phase, Phase::zero());
}

TEST(Fuse, InstrumentsCombineToJointParity) {
  Pair p = joined(SpiderKind::Z, SpiderKind::Z, EdgeKind::Plain, 1);
  const VarId b1 = p.d.add_outcome_var("b1");
  const VarId b2 = p.d.add_outcome_var("b2");
  p.d.set_instrument(p.a, OutcomeExpr::var(b1));
  p.d.set_instrument(p.b, OutcomeExpr::var(b2));
  const Diagram before = p.d;
  fuse(p.d, p.a, p.b);
  EXPECT_EQ(*p.d.spider(p.a).instrument, OutcomeExpr({b1, b2}, false));
  for (bool x : {false, true})
    for (bool y : {false, true}) {
      const Assignment a{{b1, x}, {b2, y}};
      EXPECT_TRUE(proportional(dense_contract(before, a), dense_contract(p.d, a)));
    }
}

TEST(Fuse, RejectsMixedKindsAndHadamardLinks) {
  Pair mixed = joined(SpiderKind::Z, SpiderKind::X, EdgeKind::Plain);
  EXPECT_THROW(fuse(mixed.d, mixed.a, mixed.b), RuleNotApplicable);
  Pair h = joined(SpiderKind::Z, SpiderKind::Z, EdgeKind::Hadamard);
  EXPECT_THROW(fuse(h.d, h.a, h.b), RuleNotApplicable);
}

TEST(Fuse, ParallelEdgesBecomeLoops) {
  Pair p = joined(SpiderKind::Z, SpiderKind::Z, EdgeKind::Plain, 1);
  p.d.add_edge(Endpoint::spider(p.a), Endpoint::spider(p.b), EdgeKind::Hadamard);
  const Diagram before = p.d;
  const RewriteStep st = fuse(p.d, p.a, p.b);
  EXPECT_EQ(st.loops.size(), 1u);
  EXPECT_EQ(p.d.degree(p.a), 2u);
  EXPECT_EQ(p.d.spider(p.a).phase, Phase::pi());
  EXPECT_TRUE(equivalent(before, p.d));
}

TEST(Split, InverseOfFuse) {
  Diagram d;
  const SpiderId s = d.add_spider(SpiderKind::Z, Phase(1));
  std::vector<EdgeId> legs;
  for (int k = 0; k < 4; ++k)
    legs.push_back(d.add_edge(Endpoint::spider(s), Endpoint::port(d.add_port(PortDir::Out, "q" + std::to_string(k)))));
  const Diagram before = d;
  const RewriteStep st = split(d, s, {legs[2], legs[3]});
  EXPECT_EQ(d.degree(s), 3u);
  EXPECT_EQ(d.degree(st.other), 3u);
  EXPECT_EQ(d.spider(s).phase, Phase(1));
  EXPECT_EQ(d.spider(st.other).phase, Phase::zero());
  EXPECT_TRUE(equivalent(before, d));
  fuse(d, s, st.other);
  EXPECT_EQ(fingerprint(d), fingerprint(before));
}

TEST(Split, InstrumentCanMove) {
  Diagram d = gadget("meas_z");
  const SpiderId s = d.spiders().begin()->first;
  d.add_edge(Endpoint::spider(s), Endpoint::port(d.add_port(PortDir::Out, "out0")));
  const Diagram before = d;
  const RewriteStep st = split(d, s, {d.spider(s).edges.back()}, true);
  EXPECT_FALSE(d.spider(s).instrument.has_value());
  EXPECT_TRUE(d.spider(st.other).instrument.has_value());
  EXPECT_TRUE(equivalent(before, d));
}

TEST(Split, RejectsEmptySide) {
  Diagram d = gadget("cnot");
  const SpiderId s = d.spiders().begin()->first;
  EXPECT_THROW(split(d, s, {}), RuleNotApplicable);
  EXPECT_THROW(split(d, s, d.spider(s).edges), RuleNotApplicable);
}

TEST(ColorFlip, DualityTogglesEdgeKinds) {
  Diagram d;
  const SpiderId s = d.add_spider(SpiderKind::X);
  for (int k = 0; k < 3; ++k)
    d.add_edge(Endpoint::spider(s), Endpoint::port(d.add_port(PortDir::Out, "q" + std::to_string(k))));
  const Diagram before = d;
  color_flip(d, s);
  EXPECT_EQ(d.spider(s).kind, SpiderKind::Z);
  for (const auto& [id, e] : d.edges()) EXPECT_EQ(e.kind, EdgeKind::Hadamard);
  EXPECT_TRUE(equivalent(before, d));
  color_flip(d, s);
  EXPECT_EQ(fingerprint(d), fingerprint(before));
}

TEST(ColorFlip, InstrumentUntouched) {
  Diagram d = gadget("meas_x");
  const SpiderId s = d.spiders().begin()->first;
  const auto expr = d.spider(s).instrument;
  const Diagram before = d;
  color_flip(d, s);
  EXPECT_EQ(d.spider(s).instrument, expr);
  EXPECT_TRUE(equivalent(before, d));
}

TEST(ColorFlip, CzFromCnotShape) {
  // Flipping the target of the Hadamard-conjugated CNOT leaves two Z spiders
  // joined by one Hadamard edge.
  Diagram d = gadget("cz");
  SpiderId target = -1;
  for (const auto& [id, s] : d.spiders())
    if (s.kind == SpiderKind::X) target = id;
  color_flip(d, target);
  std::size_t h = 0;
  for (const auto& [id, e] : d.edges()) h += e.kind == EdgeKind::Hadamard;
  EXPECT_EQ(h, 1u);
  for (const auto& [id, s] : d.spiders()) EXPECT_EQ(s.kind, SpiderKind::Z);
  const DenseTensor t = dense_contract(d);
  const auto cz = [](unsigned out, unsigned in) { return out == in ? (in == 3 ? -1.0 : 1.0) : 0.0; };
  EXPECT_TRUE(proportional(t, operator_tensor(d, t, 2, cz)));
}

struct IdentityCase {
  EdgeKind left, right, merged;
};

class RemoveIdentity : public ::testing::TestWithParam<IdentityCase> {};

TEST_P(RemoveIdentity, MergedKindIsXor) {
  const auto c = GetParam();
  Diagram d;
  const SpiderId a = d.add_spider(SpiderKind::X);
  const SpiderId m = d.add_spider(SpiderKind::Z);
  const SpiderId b = d.add_spider(SpiderKind::X);
  d.add_edge(Endpoint::port(d.add_port(PortDir::In, "in0")), Endpoint::spider(a));
  d.add_edge(Endpoint::spider(b), Endpoint::port(d.add_port(PortDir::Out, "out0")));
  d.add_edge(Endpoint::spider(a), Endpoint::spider(m), c.left);
  d.add_edge(Endpoint::spider(m), Endpoint::spider(b), c.right);
  const Diagram before = d;
  const RewriteStep st = remove_identity(d, m);
  ASSERT_EQ(st.created.size(), 1u);
  EXPECT_EQ(d.edge(st.created[0]).kind, c.merged);
  EXPECT_TRUE(equivalent(before, d));
}

INSTANTIATE_TEST_SUITE_P(Kinds, RemoveIdentity,
                         ::testing::Values(IdentityCase{EdgeKind::Plain, EdgeKind::Plain, EdgeKind::Plain},
                                           IdentityCase{EdgeKind::Hadamard, EdgeKind::Hadamard, EdgeKind::Plain},
                                           IdentityCase{EdgeKind::Plain, EdgeKind::Hadamard, EdgeKind::Hadamard}));

TEST(RemoveIdentityRule, Preconditions) {
  Diagram d = gadget("z_rot2");
  EXPECT_THROW(remove_identity(d, d.spiders().begin()->first), RuleNotApplicable);
  Diagram m = gadget("zz_meas");
  const Diagram copy = m;
  for (const auto& [id, s] : copy.spiders())
    if (s.instrument) EXPECT_THROW(remove_identity(m, id), RuleNotApplicable);
  Diagram g = gadget("cnot");
  EXPECT_THROW(remove_identity(g, g.spiders().begin()->first), RuleNotApplicable);
}

TEST(InsertIdentity, UndoesRemoval) {
  Diagram d = gadget("cz");
  const Diagram before = d;
  const EdgeId e = d.edges().rbegin()->first;
  const RewriteStep st = insert_identity(d, e, SpiderKind::X);
  EXPECT_TRUE(equivalent(before, d));
  remove_identity(d, st.spider);
  EXPECT_EQ(fingerprint(d), fingerprint(before));
}

TEST(Canonical, GhzBecomesOneSpider) {
  const auto [d, trace] = to_canonical(gadget("ghz_circuit"));
  ASSERT_EQ(d.spiders().size(), 1u);
  EXPECT_EQ(d.degree(d.spiders().begin()->first), 3u);
  EXPECT_TRUE(is_canonical(d));
  EXPECT_TRUE(equivalent(gadget("ghz_circuit"), d));
}

TEST(Canonical, RingBecomesSixSpiders) {
  const auto [d, trace] = to_canonical(gadget("ring6_circuit"));
  EXPECT_EQ(d.spiders().size(), 6u);
  std::size_t h = 0;
  for (const auto& [id, e] : d.edges()) h += e.kind == EdgeKind::Hadamard;
  EXPECT_EQ(h, 6u);
  for (const auto& [id, s] : d.spiders()) EXPECT_EQ(d.degree(id), 3u);
}

TEST(Canonical, LatticeIsAllGreenWithDegreeFourBulk) {
  const auto [d, trace] = to_canonical(cbqc({3, 2, true}).first);
  EXPECT_TRUE(is_canonical(d));
  std::size_t bulk = 0;
  for (const auto& [id, s] : d.spiders()) {
    EXPECT_EQ(s.kind, SpiderKind::Z);
    if (!d.touches_port(id) && d.degree(id) == 4) ++bulk;
  }
  EXPECT_GT(bulk, 0u);
  for (const auto& [id, e] : d.edges())
    if (e.a.is_spider() && e.b.is_spider()) EXPECT_EQ(e.kind, EdgeKind::Hadamard);
}

TEST(Canonical, Idempotent) {
  const Diagram once = to_canonical(cbqc({2, 2, true}).first).first;
  const auto [twice, trace] = to_canonical(once);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(fingerprint(twice), fingerprint(once));
}

TEST(Trace, JsonRoundTripAndReplay) {
  const Diagram d = gadget("ghz_circuit");
  const auto [canon, trace] = to_canonical(d);
  const RewriteTrace back = trace_from_json(trace_to_json(trace));
  ASSERT_EQ(back.steps.size(), trace.steps.size());
  for (std::size_t k = 0; k < back.steps.size(); ++k) EXPECT_EQ(back.steps[k], trace.steps[k]);
  EXPECT_EQ(serialize(replay(d, back)), serialize(canon));
}

TEST(Transport, RingWebKeepsSignature) {
  const Diagram d = gadget("ring6_circuit");
  const auto [canon, trace] = to_canonical(d);
  const OuterSignature target = parse_signature(d, "in:|out:ZXZIII");
  const auto w = find_web(d, target);
  ASSERT_TRUE(w.has_value());
  const PauliWeb moved = transport_web(*w, trace);
  EXPECT_TRUE(verify(moved, canon).empty());
  EXPECT_EQ(signature_string(canon, outer_signature(canon, moved)), "in:|out:ZXZIII");
  EXPECT_EQ(moved.sign, w->sign);
}

TEST(Transport, ColorFlipSwapsHighlights) {
  Diagram d;
  const SpiderId s = d.add_spider(SpiderKind::X);
  for (int k = 0; k < 2; ++k)
    d.add_edge(Endpoint::spider(s), Endpoint::port(d.add_port(PortDir::Out, "q" + std::to_string(k))));
  PauliWeb w;
  for (const auto& [id, e] : d.edges()) w.set(id, {true, false});
  w.sign = sign(w, d);
  ASSERT_TRUE(verify(w, d).empty());
  const Diagram pre = d;
  const RewriteStep st = color_flip(d, s);
  const PauliWeb moved = transport_web(pre, w, st);
  EXPECT_TRUE(verify(moved, d).empty());
  EXPECT_EQ(outer_signature(d, moved), outer_signature(pre, w));
}

TEST(Transport, InvalidWebIsRejected) {
  Diagram d = gadget("cnot");
  PauliWeb w;
  w.set(d.edges().begin()->first, {true, false});
  Diagram post = d;
  const RewriteStep st = color_flip(post, d.spiders().begin()->first);
  EXPECT_THROW(transport_web(d, w, st), ContractViolation);
}

TEST(Transport, CbqcChecksSurviveCanonicalization) {
  const Diagram d = cbqc({2, 2, true}).first;
  const auto [canon, trace] = to_canonical(d);
  const WebBasis b = web_basis(d);
  ASSERT_FALSE(b.checks.empty());
  for (const auto& w : b.checks) {
    const PauliWeb moved = transport_web(w, trace);
    EXPECT_TRUE(verify(moved, canon).empty());
    EXPECT_TRUE(outer_is_identity(outer_signature(canon, moved)));
  }
}

}  // namespace
}  // namespace zxft
