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

#ifndef COHESIA_SYNTHESIZE_H_
#define COHESIA_SYNTHESIZE_H_

// Generation stage: group the selected predications by shared arguments and
// render them as semi-text, sentences for complete predications and bare
// phrases for fragments, in source order.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cohesia/cohesion.h"
#include "cohesia/select.h"

namespace cohesia {

enum class SummaryFormat { kRunning, kHeaded };

// "running" or "headed"; throws InvalidArgumentError otherwise.
SummaryFormat ParseSummaryFormat(std::string_view name);
std::string_view SummaryFormatName(SummaryFormat format);

struct TopicCluster {
  // Most frequent argument head among the members, ties alphabetical.
  std::string label;
  // Ordered by (sentence index, id).
  std::vector<int> members;
};

struct RenderedFragment {
  int node_id = 0;
  size_t cluster = 0;
  std::string text;
  bool complete = false;
};

struct SummaryOutput {
  SummaryFormat format = SummaryFormat::kRunning;
  std::string source_doc_id;
  std::vector<std::string> cluster_labels;
  std::vector<RenderedFragment> fragments;

  // Running: one paragraph. Headed: "== label ==" above each cluster.
  std::string ToText() const;
  // Word tokens over the rendered fragments (headers excluded).
  size_t WordCount() const;
};

// Transitive closure of the shared-argument-head relation over the selected
// nodes. Clusters are ordered by their earliest sentence, then smallest id.
std::vector<TopicCluster> Cluster(const Selection& selection,
                                  const CohesionGraph& graph);

// "Committee approve budget." for a complete predication; the available
// heads ("result") for a fragment.
std::string RenderPredication(const Predication& p);

SummaryOutput Render(const std::vector<TopicCluster>& clusters,
                     const CohesionGraph& graph, SummaryFormat format,
                     std::string source_doc_id);

// Predicate plus resolved argument heads.
size_t PredicationTokenCount(const Predication& p);

}  // namespace cohesia

#endif  // COHESIA_SYNTHESIZE_H_
