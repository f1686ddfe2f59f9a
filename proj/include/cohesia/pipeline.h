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

#ifndef COHESIA_PIPELINE_H_
#define COHESIA_PIPELINE_H_

// Interpretation -> transformation -> generation for one document.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohesia/cohesion.h"
#include "cohesia/factors.h"
#include "cohesia/ingest.h"
#include "cohesia/interpret.h"
#include "cohesia/lexicon.h"
#include "cohesia/select.h"
#include "cohesia/synthesize.h"

namespace cohesia {

struct EngineOptions {
  EngineParams params;
  // Explicit node budget; otherwise derived from params.compression_ratio.
  std::optional<size_t> budget_k;
  bool pred_cross_only = false;
  const SynonymTable* synonyms = nullptr;

  GraphOptions graph_options() const {
    return {params.edge_weights, synonyms, pred_cross_only};
  }
};

struct SummaryResult {
  std::string doc_id;
  CohesionGraph graph;
  Selection selection;
  std::vector<TopicCluster> clusters;
  SummaryOutput output;
};

// Throws InvalidArgumentError when there are no predications.
SummaryResult SummarizePredications(std::string doc_id,
                                    std::vector<Predication> preds,
                                    const EngineOptions& options);

SummaryResult SummarizeDocument(const Document& doc, const Lexicon& lexicon,
                                const EngineOptions& options);

// Sentences holding the selected predications, as ProjectToSentences with m
// equal to their number.
std::vector<size_t> SelectedSentences(const SummaryResult& result);

// Heads and predicates of the selected predications, most frequent first,
// ties alphabetical.
std::vector<std::string> SelectionKeyTerms(const SummaryResult& result);

// Text for the chosen projection. Sentence projection quotes `doc` when
// given, else lists indices; m defaults to the number of sentences the
// selection touches.
std::string RenderProjection(const SummaryResult& result, const Document* doc,
                             ProjectionMode mode,
                             std::optional<size_t> m = std::nullopt);

// Selection, weights and score breakdown as one JSON line.
std::string ExplainJson(const SummaryResult& result, const EngineOptions& options);

}  // namespace cohesia

#endif  // COHESIA_PIPELINE_H_
