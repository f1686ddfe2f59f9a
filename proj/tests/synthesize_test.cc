// Copyright 2026 The Cohesia Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohesia/synthesize.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "cohesia/error.h"
#include "test_util.h"

namespace cohesia {
namespace {

using ::cohesia::testing::Pred;

Selection All(const CohesionGraph& g) {
  Selection sel;
  for (const Predication& p : g.nodes()) sel.node_ids.push_back(p.id);
  return sel;
}

TEST(ClusterTest, SharedHeadFormsOneCluster) {
  const CohesionGraph g = BuildGraph({Pred(0, "approve", {"committee", "budget"}, 0),
                                      Pred(1, "cut", {"budget"}, 1)});
  const auto clusters = Cluster(All(g), g);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].label, "budget");
  EXPECT_EQ(clusters[0].members, (std::vector<int>{0, 1}));
}

TEST(ClusterTest, NoSharedHeadsGiveSingletons) {
  const CohesionGraph g = BuildGraph({Pred(0, "rise", {"price"}, 0),
                                      Pred(1, "fall", {"export"}, 0), Pred(2, "", {"rain"}, 1)});
  const auto clusters = Cluster(All(g), g);
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[0].label, "price");
  EXPECT_EQ(clusters[1].label, "export");
  EXPECT_EQ(clusters[2].label, "rain");
}

TEST(ClusterTest, TransitiveClosure) {
  const CohesionGraph g = BuildGraph({Pred(0, "a", {"x", "y"}, 0),
                                      Pred(1, "b", {"y", "z"}, 1), Pred(2, "c", {"z"}, 2),
                                      Pred(3, "d", {"w"}, 0)});
  const auto clusters = Cluster(All(g), g);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].members, (std::vector<int>{0, 1, 2}));
  // y and z occur twice; the tie goes to the alphabetically first.
  EXPECT_EQ(clusters[0].label, "y");
  EXPECT_EQ(clusters[1].members, (std::vector<int>{3}));
}

TEST(ClusterTest, ClustersOrderedByFirstSentence) {
  const CohesionGraph g = BuildGraph({Pred(0, "a", {"late"}, 4), Pred(1, "b", {"early"}, 1)});
  const auto clusters = Cluster(All(g), g);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].label, "early");
}

TEST(ClusterTest, UnselectedNodesIgnored) {
  const CohesionGraph g = BuildGraph({Pred(0, "a", {"x"}, 0), Pred(1, "b", {"x"}, 1)});
  Selection sel;
  sel.node_ids = {1};
  const auto clusters = Cluster(sel, g);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].members, (std::vector<int>{1}));
}

TEST(RenderTest, CompletePredication) {
  EXPECT_EQ(RenderPredication(Pred(0, "approve", {"committee", "budget"}, 0)),
            "Committee approve budget.");
}

TEST(RenderTest, FragmentIsBarePhrase) {
  EXPECT_EQ(RenderPredication(Pred(0, "", {"result"}, 0)), "result");
}

TEST(RenderTest, UsesSurfaceForms) {
  Predication p = Pred(0, "rise", {"price"}, 0);
  p.args[0].surface = "Prices";
  EXPECT_EQ(RenderPredication(p), "Prices rise.");
}

TEST(RenderTest, RunningJoinsFragmentsWithSemicolons) {
  const CohesionGraph g = BuildGraph({Pred(0, "", {"result"}, 0), Pred(1, "", {"figure"}, 1),
                                      Pred(2, "rise", {"price"}, 2)});
  const SummaryOutput out = Render(Cluster(All(g), g), g, SummaryFormat::kRunning, "d");
  EXPECT_EQ(out.ToText(), "result; figure. Price rise.\n");
  EXPECT_EQ(out.source_doc_id, "d");
  EXPECT_EQ(out.fragments.size(), 3u);
}

TEST(RenderTest, HeadedFormat) {
  const CohesionGraph g = BuildGraph({Pred(0, "approve", {"committee", "budget"}, 0),
                                      Pred(1, "cut", {"budget"}, 1), Pred(2, "", {"rain"}, 2)});
  const SummaryOutput out = Render(Cluster(All(g), g), g, SummaryFormat::kHeaded, "d");
  EXPECT_EQ(out.ToText(),
            "== budget ==\nCommittee approve budget. Budget cut.\n\n== rain ==\nrain.\n");
  // Headers do not count as summary words.
  EXPECT_EQ(out.WordCount(), 6u);
}

TEST(RenderTest, EveryFragmentTracesToOneSelectedNode) {
  const Lexicon& lex = Lexicon::Default();
  for (const auto& path : testing::FixturePaths()) {
    const CohesionGraph g = BuildGraph(Interpret(LoadDocument(path, lex), lex));
    const Selection sel = All(g);
    const SummaryOutput out = Render(Cluster(sel, g), g, SummaryFormat::kRunning, "d");
    std::vector<int> ids;
    for (const RenderedFragment& f : out.fragments) ids.push_back(f.node_id);
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(ids, sel.node_ids);
  }
}

TEST(FormatTest, Names) {
  EXPECT_EQ(ParseSummaryFormat("headed"), SummaryFormat::kHeaded);
  EXPECT_EQ(SummaryFormatName(SummaryFormat::kRunning), "running");
  EXPECT_THROW(ParseSummaryFormat("bullets"), InvalidArgumentError);
}

TEST(TokenCountTest, PredicateAndHeads) {
  EXPECT_EQ(PredicationTokenCount(Pred(0, "approve", {"committee", "budget"}, 0)), 3u);
  EXPECT_EQ(PredicationTokenCount(Pred(0, "", {"result"}, 0)), 1u);
}

}  // namespace
}  // namespace cohesia
