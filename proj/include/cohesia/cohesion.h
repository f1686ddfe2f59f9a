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

#ifndef COHESIA_COHESION_H_
#define COHESIA_COHESION_H_

// The source representation: an undirected graph over predications whose
// typed, weighted edges record shared predicates, shared arguments within a
// sentence, and similar argument heads across sentences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cohesia/interpret.h"
#include "cohesia/lexicon.h"

namespace cohesia {

enum class EdgeType : uint8_t {
  kCommonPredicate = 0,
  kSharedArgumentIntra = 1,
  kSimilarArgumentInter = 2,
};

constexpr EdgeType kAllEdgeTypes[] = {EdgeType::kCommonPredicate,
                                      EdgeType::kSharedArgumentIntra,
                                      EdgeType::kSimilarArgumentInter};

// "CommonPredicate", "SharedArgumentIntra", "SimilarArgumentInter".
std::string_view EdgeTypeName(EdgeType type);

class EdgeTypeSet {
 public:
  EdgeTypeSet() = default;

  void Insert(EdgeType t) { bits_ |= Bit(t); }
  bool Has(EdgeType t) const { return (bits_ & Bit(t)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<EdgeType> Types() const;
  // Names joined with '+', in enum order.
  std::string ToString() const;

  bool operator==(const EdgeTypeSet&) const = default;

 private:
  static uint8_t Bit(EdgeType t) { return uint8_t{1} << static_cast<int>(t); }
  uint8_t bits_ = 0;
};

struct EdgeWeights {
  double w_pred = 0.8;
  double w_intra = 1.0;
  double w_inter = 0.5;
  // Multiplies the cross-sentence contribution when it rests only on
  // synonym-table equivalence.
  double synonym_discount = 0.8;

  // Throws InvalidArgumentError unless all weights are positive and the
  // discount lies in (0, 1].
  void Validate() const;
};

struct GraphOptions {
  EdgeWeights weights;
  const SynonymTable* synonyms = nullptr;
  // Only link equal predicates across different sentences.
  bool pred_cross_only = false;
};

struct Edge {
  int a = 0;  // Smaller node id.
  int b = 0;
  EdgeTypeSet types;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

class CohesionGraph {
 public:
  struct Neighbor {
    size_t index;
    double weight;
  };

  CohesionGraph() = default;
  // Nodes are reordered by id. Throws InvalidArgumentError on duplicate ids,
  // self-loops, repeated pairs, unknown endpoints or non-positive weights.
  CohesionGraph(std::vector<Predication> nodes, std::vector<Edge> edges);

  // Nodes ordered by id.
  const std::vector<Predication>& nodes() const { return nodes_; }
  // Edges ordered by (a, b).
  const std::vector<Edge>& edges() const { return edges_; }
  size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  // Position of node `id` in nodes(); throws InvalidArgumentError if absent.
  size_t IndexOf(int id) const;
  bool Contains(int id) const;

  const std::vector<Neighbor>& neighbors(size_t index) const {
    return adjacency_[index];
  }
  double WeightedDegree(size_t index) const { return degree_[index]; }
  double MaxWeightedDegree() const { return max_degree_; }
  double MaxEdgeWeight() const { return max_edge_weight_; }

  // The same graph with every edge weight multiplied by `factor` > 0.
  CohesionGraph Scaled(double factor) const;

 private:
  std::vector<Predication> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degree_;
  double max_degree_ = 0.0;
  double max_edge_weight_ = 0.0;
};

// Links every pair of predications on which at least one rule fires; the
// edge weight is the sum of the fired rules' weights. Throws
// InvalidArgumentError for an empty list or duplicate ids.
CohesionGraph BuildGraph(std::vector<Predication> preds,
                         const GraphOptions& options = {});

// Connected components as node-id sets, ordered by smallest member id.
std::vector<std::set<int>> Components(const CohesionGraph& graph);

struct LinkageStats {
  size_t nodes = 0;
  size_t edges = 0;
  size_t components = 0;
  size_t largest_component = 0;
  size_t isolated_nodes = 0;
  // Share of edges carrying a cross-sentence link.
  double inter_edge_fraction = 0.0;
};

LinkageStats ComputeLinkageStats(const CohesionGraph& graph);

enum class GraphFormat { kJson, kDot };

// "json" or "dot"; throws InvalidArgumentError otherwise.
GraphFormat ParseGraphFormat(std::string_view name);

// Deterministic serialisation: nodes by id, edges by (a, b).
std::string ExportGraph(const CohesionGraph& graph, GraphFormat format);

// Shortest decimal form that reads back to the same double.
std::string FormatNumber(double value);

}  // namespace cohesia

#endif  // COHESIA_COHESION_H_
