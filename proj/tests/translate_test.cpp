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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zxft/oracle.hpp"

namespace zxft {
namespace {

class Translate : public ::testing::TestWithParam<Flavor> {};

TEST_P(Translate, ReproducesBuilder) {
  const PatchSpec spec{3, 2, true};
  const auto [c, cm] = cbqc(spec);
  const Translation t = translate(GetParam(), c, cm);
  EXPECT_EQ(fingerprint(t.diagram), fingerprint(build(GetParam(), spec).first));
  EXPECT_EQ(t.meta.flavor, GetParam());
  EXPECT_TRUE(t.diagram.valid());
}

TEST_P(Translate, TraceReplays) {
  const auto [c, cm] = cbqc({3, 2, true});
  const Translation t = translate(GetParam(), c, cm);
  EXPECT_EQ(fingerprint(replay(t.source, t.trace)), fingerprint(t.diagram));
  EXPECT_EQ(trace_from_json(trace_to_json(t.trace)).steps, t.trace.steps);
}

TEST_P(Translate, TransportedWebsVerify) {
  const auto [c, cm] = cbqc({3, 2, true});
  const Translation t = translate(GetParam(), c, cm);
  ASSERT_EQ(t.map.outer.size(), t.map.source_outer.size());
  ASSERT_EQ(t.map.checks.size(), t.map.source_checks.size());
  for (std::size_t k = 0; k < t.map.outer.size(); ++k) {
    EXPECT_TRUE(verify(t.map.outer[k], t.diagram).empty());
    EXPECT_EQ(outer_signature(t.diagram, t.map.outer[k]), outer_signature(t.source, t.map.source_outer[k]));
  }
  for (const auto& w : t.map.checks) {
    EXPECT_TRUE(verify(w, t.diagram).empty());
    EXPECT_TRUE(outer_is_identity(outer_signature(t.diagram, w)));
  }
  const CorrespondenceReport r = check_correspondence(t);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_EQ(r.source_rank, r.target_rank);
  EXPECT_EQ(r.zero_outer_source, r.zero_outer_target);
}

TEST_P(Translate, SmallPatchesHaveNoInteriorCells) {
  const auto [c, cm] = cbqc({3, 3, true});
  EXPECT_EQ(check_correspondence(translate(GetParam(), c, cm)).interior_cells, 0u);
}

TEST_P(Translate, InteriorCellOutcomes) {
  const auto [c, cm] = cbqc({5, 3, true});
  const CorrespondenceReport r = check_correspondence(translate(GetParam(), c, cm));
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_EQ(r.interior_cells, 8u);
  std::size_t kinds = 0;
  for (const auto& e : expected_cell_kinds(GetParam())) {
    std::string key;
    for (const auto& [name, n] : e) key += (key.empty() ? "" : ",") + name + ":" + std::to_string(n);
    kinds += r.table.count(key);
  }
  EXPECT_EQ(kinds, r.table.size());
  EXPECT_EQ(r.table.size(), expected_cell_kinds(GetParam()).size());
}

INSTANTIATE_TEST_SUITE_P(All, Translate, ::testing::Values(Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC),
                         [](const auto& info) { return to_string(info.param); });

TEST(Translate, CbqcCellsAreWeightTwo) {
  const auto [c, cm] = cbqc({5, 3, true});
  std::size_t interior = 0;
  for (const auto& cc : cell_checks(c, cm)) {
    if (!cc.interior) continue;
    ++interior;
    ASSERT_TRUE(cc.web.has_value());
    EXPECT_EQ(cc.outcomes(), 2);
    EXPECT_TRUE(verify(*cc.web, c).empty());
  }
  EXPECT_EQ(interior, 8u);
}

TEST(Translate, IdentityKeepsDiagram) {
  const auto [c, cm] = cbqc({2, 1, true});
  const Translation t = identity_translation(c, cm);
  EXPECT_TRUE(t.trace.steps.empty());
  EXPECT_EQ(fingerprint(t.diagram), fingerprint(c));
  EXPECT_TRUE(check_correspondence(t).ok());
}

}  // namespace
}  // namespace zxft
