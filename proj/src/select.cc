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

#include "cohesia/select.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <tuple>

#include "cohesia/error.h"

namespace cohesia {
namespace {

ScoreBreakdown ScoreIndices(const std::vector<size_t>& members,
                            const CohesionGraph& graph,
                            const ScoreWeights& weights) {
  const size_t n = graph.size();
  const double s = static_cast<double>(members.size());
  std::vector<bool> in_set(n, false);
  for (size_t v : members) in_set[v] = true;

  ScoreBreakdown b;
  const double max_degree = graph.MaxWeightedDegree();
  std::vector<bool> covered(n, false);
  size_t covered_count = 0;
  double internal = 0.0;
  for (size_t v : members) {
    if (max_degree > 0) b.centrality += graph.WeightedDegree(v) / max_degree;
    if (!covered[v]) {
      covered[v] = true;
      ++covered_count;
    }
    for (const auto& nb : graph.neighbors(v)) {
      if (!covered[nb.index]) {
        covered[nb.index] = true;
        ++covered_count;
      }
      if (in_set[nb.index] && nb.index > v) internal += nb.weight;
    }
    const Markedness& m = graph.nodes()[v].markedness;
    b.prior += (m.location_score + std::max(m.cue_score, 0.0)) / 2.0;
  }
  b.centrality /= s;
  b.prior /= s;
  b.representativeness = static_cast<double>(covered_count) / static_cast<double>(n);
  if (members.size() == 1) {
    b.coherence = 1.0;
  } else if (graph.MaxEdgeWeight() > 0) {
    const double pairs = s * (s - 1.0) / 2.0;
    b.coherence = internal / (graph.MaxEdgeWeight() * pairs);
  }
  b.total = weights.alpha * b.centrality + weights.beta * b.representativeness +
            weights.gamma * b.coherence + weights.delta * b.prior;
  return b;
}

using SortKey = std::vector<std::pair<size_t, int>>;

// Tie-break key: members as ascending (sentence index, id) pairs.
SortKey KeyOf(const std::vector<size_t>& members, const CohesionGraph& graph) {
  SortKey key;
  key.reserve(members.size());
  for (size_t v : members) {
    const Predication& p = graph.nodes()[v];
    key.emplace_back(p.sentence_index, p.id);
  }
  std::sort(key.begin(), key.end());
  return key;
}

Selection MakeSelection(const std::vector<size_t>& members,
                        const CohesionGraph& graph, size_t k,
                        const ScoreWeights& weights) {
  Selection sel;
  sel.budget_k = k;
  for (size_t v : members) sel.node_ids.push_back(graph.nodes()[v].id);
  std::sort(sel.node_ids.begin(), sel.node_ids.end());
  sel.breakdown = ScoreIndices(members, graph, weights);
  return sel;
}

void CheckSelectArgs(const CohesionGraph& graph, size_t k,
                     const ScoreWeights& weights) {
  if (graph.empty()) throw InvalidArgumentError("cannot select from an empty graph");
  if (k == 0) throw InvalidArgumentError("budget k must be at least 1");
  weights.Validate();
}

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(size_t n, size_t k, Fn fn) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void ScoreWeights::Validate() const {
  if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0) {
    throw InvalidArgumentError("score weights must be non-negative");
  }
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-9) {
    throw InvalidArgumentError("alpha + beta + gamma must equal 1");
  }
}

ScoreBreakdown Score(std::span<const int> node_ids, const CohesionGraph& graph,
                     const ScoreWeights& weights) {
  if (node_ids.empty()) throw InvalidArgumentError("cannot score an empty node set");
  std::vector<size_t> members;
  members.reserve(node_ids.size());
  for (int id : node_ids) members.push_back(graph.IndexOf(id));
  std::vector<size_t> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgumentError("node set contains a repeated id");
  }
  return ScoreIndices(members, graph, weights);
}

Selection GreedySelect(const CohesionGraph& graph, size_t k,
                       const ScoreWeights& weights) {
  CheckSelectArgs(graph, k, weights);
  const size_t n = graph.size();
  const size_t target = std::min(k, n);
  std::vector<size_t> members;
  std::vector<bool> chosen(n, false);
  std::vector<double> totals(n);
  while (members.size() < target) {
    double best = -std::numeric_limits<double>::infinity();
    for (size_t v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      members.push_back(v);
      totals[v] = ScoreIndices(members, graph, weights).total;
      members.pop_back();
      best = std::max(best, totals[v]);
    }
    std::optional<size_t> pick;
    for (size_t v = 0; v < n; ++v) {
      if (chosen[v] || totals[v] < best - kScoreTolerance) continue;
      const Predication& p = graph.nodes()[v];
      if (!pick || std::pair(p.sentence_index, p.id) <
                       std::pair(graph.nodes()[*pick].sentence_index,
                                 graph.nodes()[*pick].id)) {
        pick = v;
      }
    }
    chosen[*pick] = true;
    members.push_back(*pick);
  }
  return MakeSelection(members, graph, k, weights);
}

Selection ExhaustiveSelect(const CohesionGraph& graph, size_t k,
                           const ScoreWeights& weights) {
  CheckSelectArgs(graph, k, weights);
  const size_t n = graph.size();
  if (n > kExhaustiveNodeLimit) {
    throw InvalidArgumentError("exhaustive selection is limited to " +
                               std::to_string(kExhaustiveNodeLimit) + " nodes");
  }
  const size_t target = std::min(k, n);
  double best = -std::numeric_limits<double>::infinity();
  ForEachSubset(n, target, [&](const std::vector<size_t>& subset) {
    best = std::max(best, ScoreIndices(subset, graph, weights).total);
  });
  std::vector<size_t> winner;
  SortKey winner_key;
  ForEachSubset(n, target, [&](const std::vector<size_t>& subset) {
    if (ScoreIndices(subset, graph, weights).total < best - kScoreTolerance) return;
    SortKey key = KeyOf(subset, graph);
    if (winner.empty() || key < winner_key) {
      winner = subset;
      winner_key = std::move(key);
    }
  });
  return MakeSelection(winner, graph, k, weights);
}

size_t BudgetFromRatio(double ratio, size_t node_count) {
  if (!(ratio > 0) || ratio > 1) {
    throw InvalidArgumentError("compression ratio must lie in (0, 1]");
  }
  const auto k = static_cast<size_t>(std::llround(ratio * static_cast<double>(node_count)));
  return std::max<size_t>(1, k);
}

std::vector<size_t> ProjectToSentences(const Selection& selection,
                                       const CohesionGraph& graph, size_t m) {
  struct Tally {
    size_t count = 0;
    double mass = 0.0;
  };
  std::map<size_t, Tally> tallies;
  for (const Predication& p : graph.nodes()) tallies[p.sentence_index];
  for (int id : selection.node_ids) {
    const size_t v = graph.IndexOf(id);
    Tally& t = tallies[graph.nodes()[v].sentence_index];
    ++t.count;
    t.mass += graph.WeightedDegree(v);
  }
  std::vector<std::pair<size_t, Tally>> ranked(tallies.begin(), tallies.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (x.second.count != y.second.count) return x.second.count > y.second.count;
    return x.second.mass > y.second.mass;  // Stable: equal keeps source order.
  });
  std::vector<size_t> out;
  for (size_t i = 0; i < std::min(m, ranked.size()); ++i) {
    out.push_back(ranked[i].first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cohesia
