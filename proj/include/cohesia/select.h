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

#ifndef COHESIA_SELECT_H_
#define COHESIA_SELECT_H_

// Transformation stage: choose the summary node set from a cohesion graph by
// scoring candidate sets for centrality, representativeness and coherence.
//
// For a node set S over graph G = (V, E) with weighted degree deg(v):
//
//   centrality(S)         = mean_{v in S} deg(v) / max_u deg(u)
//   representativeness(S) = |S plus its neighbours| / |V|
//   coherence(S)          = internal edge weight / (max edge weight * C(|S|,2)),
//                           1 for a singleton
//   prior(S)              = mean_{v in S} (location + max(cue, 0)) / 2
//   total                 = alpha*c + beta*r + gamma*h + delta*p
//
// Every component lies in [0, 1] and is invariant under uniform scaling of
// the edge weights.

#include <cstddef>
#include <span>
#include <vector>

#include "cohesia/cohesion.h"

namespace cohesia {

// Totals closer than this are treated as equal and resolved by tie-break.
constexpr double kScoreTolerance = 1e-9;
// Largest graph ExhaustiveSelect accepts.
constexpr size_t kExhaustiveNodeLimit = 20;

struct ScoreWeights {
  double alpha = 1.0 / 3.0;  // centrality
  double beta = 1.0 / 3.0;   // representativeness
  double gamma = 1.0 / 3.0;  // coherence
  double delta = 0.0;        // markedness prior

  // Throws InvalidArgumentError unless all weights are >= 0 and
  // alpha + beta + gamma = 1 within 1e-9.
  void Validate() const;
};

struct ScoreBreakdown {
  double centrality = 0.0;
  double representativeness = 0.0;
  double coherence = 0.0;
  double prior = 0.0;
  double total = 0.0;
};

struct Selection {
  std::vector<int> node_ids;  // Ascending.
  ScoreBreakdown breakdown;
  size_t budget_k = 1;
};

// Throws InvalidArgumentError for an empty set, unknown or repeated ids.
ScoreBreakdown Score(std::span<const int> node_ids, const CohesionGraph& graph,
                     const ScoreWeights& weights);

// Grows the set one node at a time, each time adding the node that maximises
// the score of the enlarged set. Ties go to the lower sentence index, then
// the lower node id. Stops at min(k, |V|) nodes.
Selection GreedySelect(const CohesionGraph& graph, size_t k,
                       const ScoreWeights& weights);

// True argmax over all min(k, |V|)-subsets with the same tie-break (sets
// compared as sequences of (sentence index, id)). Requires |V| <= 20.
Selection ExhaustiveSelect(const CohesionGraph& graph, size_t k,
                           const ScoreWeights& weights);

// max(1, round(ratio * node_count)).
size_t BudgetFromRatio(double ratio, size_t node_count);

// Sentences ranked by number of selected predications, then by their summed
// weighted degree, then by position; the top min(m, #sentences) are returned
// in source order. Only sentences that contribute nodes to the graph count.
std::vector<size_t> ProjectToSentences(const Selection& selection,
                                       const CohesionGraph& graph, size_t m);

}  // namespace cohesia

#endif  // COHESIA_SELECT_H_
