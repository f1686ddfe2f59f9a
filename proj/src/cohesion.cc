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

#include "cohesia/cohesion.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>
#include <utility>

#include "cohesia/error.h"
#include "json.hpp"

namespace cohesia {
namespace {

using OrderedJson = nlohmann::ordered_json;

// Evidence gathered for one unordered node pair (by index).
struct PairEvidence {
  bool common_predicate = false;
  bool intra = false;
  bool inter_exact = false;
  bool inter_synonym = false;
};

using PairKey = std::pair<size_t, size_t>;

template <typename Fn>
void ForEachPair(const std::vector<size_t>& members, Fn fn) {
  for (size_t x = 0; x < members.size(); ++x) {
    for (size_t y = x + 1; y < members.size(); ++y) {
      fn(std::min(members[x], members[y]), std::max(members[x], members[y]));
    }
  }
}

std::string EscapeDot(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

OrderedJson NodeJson(const Predication& p) {
  OrderedJson j;
  j["id"] = p.id;
  j["pred"] = p.predicate ? OrderedJson(*p.predicate) : OrderedJson(nullptr);
  j["args"] = OrderedJson::array();
  for (const Argument& a : p.args) {
    OrderedJson ja;
    ja["head"] = a.head;
    ja["surface"] = a.surface;
    ja["role"] = a.role;
    j["args"].push_back(std::move(ja));
  }
  j["sent"] = p.sentence_index;
  j["complete"] = p.complete;
  return j;
}

}  // namespace

std::string_view EdgeTypeName(EdgeType type) {
  switch (type) {
    case EdgeType::kCommonPredicate:
      return "CommonPredicate";
    case EdgeType::kSharedArgumentIntra:
      return "SharedArgumentIntra";
    case EdgeType::kSimilarArgumentInter:
      return "SimilarArgumentInter";
  }
  return "";
}

std::vector<EdgeType> EdgeTypeSet::Types() const {
  std::vector<EdgeType> out;
  for (EdgeType t : kAllEdgeTypes) {
    if (Has(t)) out.push_back(t);
  }
  return out;
}

std::string EdgeTypeSet::ToString() const {
  std::string out;
  for (EdgeType t : Types()) {
    if (!out.empty()) out += '+';
    out += EdgeTypeName(t);
  }
  return out;
}

void EdgeWeights::Validate() const {
  if (!(w_pred > 0) || !(w_intra > 0) || !(w_inter > 0)) {
    throw InvalidArgumentError("edge weights must be positive");
  }
  if (!(synonym_discount > 0) || synonym_discount > 1) {
    throw InvalidArgumentError("synonym discount must lie in (0, 1]");
  }
}

CohesionGraph::CohesionGraph(std::vector<Predication> nodes,
                             std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Predication& x, const Predication& y) { return x.id < y.id; });
  for (size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].id == nodes_[i - 1].id) {
      throw InvalidArgumentError("duplicate node id " +
                                 std::to_string(nodes_[i].id));
    }
  }
  for (Edge& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  adjacency_.assign(nodes_.size(), {});
  degree_.assign(nodes_.size(), 0.0);
  for (size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.a == e.b) throw InvalidArgumentError("self-loop on node " + std::to_string(e.a));
    if (k > 0 && edges_[k - 1].a == e.a && edges_[k - 1].b == e.b) {
      throw InvalidArgumentError("repeated edge " + std::to_string(e.a) + "-" +
                                 std::to_string(e.b));
    }
    if (!(e.weight > 0)) throw InvalidArgumentError("edge weight must be positive");
    const size_t i = IndexOf(e.a);
    const size_t j = IndexOf(e.b);
    adjacency_[i].push_back({j, e.weight});
    adjacency_[j].push_back({i, e.weight});
    degree_[i] += e.weight;
    degree_[j] += e.weight;
    max_edge_weight_ = std::max(max_edge_weight_, e.weight);
  }
  for (double d : degree_) max_degree_ = std::max(max_degree_, d);
}

size_t CohesionGraph::IndexOf(int id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const Predication& p, int value) { return p.id < value; });
  if (it == nodes_.end() || it->id != id) {
    throw InvalidArgumentError("unknown node id " + std::to_string(id));
  }
  return static_cast<size_t>(it - nodes_.begin());
}

bool CohesionGraph::Contains(int id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const Predication& p, int value) { return p.id < value; });
  return it != nodes_.end() && it->id == id;
}

CohesionGraph CohesionGraph::Scaled(double factor) const {
  if (!(factor > 0)) throw InvalidArgumentError("scale factor must be positive");
  std::vector<Edge> scaled = edges_;
  for (Edge& e : scaled) e.weight *= factor;
  return CohesionGraph(nodes_, std::move(scaled));
}

CohesionGraph BuildGraph(std::vector<Predication> preds,
                         const GraphOptions& options) {
  if (preds.empty()) throw InvalidArgumentError("cannot build a graph with no predications");
  options.weights.Validate();
  std::sort(preds.begin(), preds.end(),
            [](const Predication& x, const Predication& y) { return x.id < y.id; });
  for (size_t i = 1; i < preds.size(); ++i) {
    if (preds[i].id == preds[i - 1].id) {
      throw InvalidArgumentError("duplicate predication id " +
                                 std::to_string(preds[i].id));
    }
  }

  // Inverted indexes from predicate, head and synonym group to node indices.
  std::map<std::string, std::vector<size_t>> by_predicate;
  std::map<std::string, std::vector<size_t>> by_head;
  std::map<int, std::vector<size_t>> by_group;
  // Distinct heads each node has in each synonym group.
  std::vector<std::map<int, std::set<std::string>>> group_heads(preds.size());
  for (size_t i = 0; i < preds.size(); ++i) {
    const Predication& p = preds[i];
    if (p.predicate) by_predicate[*p.predicate].push_back(i);
    std::set<std::string> heads;
    for (const Argument& a : p.args) {
      if (!a.head.empty()) heads.insert(a.head);
    }
    for (const std::string& h : heads) {
      by_head[h].push_back(i);
      if (options.synonyms != nullptr) {
        const int g = options.synonyms->GroupOf(h);
        if (g < 0) continue;
        if (group_heads[i][g].empty()) by_group[g].push_back(i);
        group_heads[i][g].insert(h);
      }
    }
  }

  std::map<PairKey, PairEvidence> evidence;
  auto same_sentence = [&](size_t i, size_t j) {
    return preds[i].sentence_index == preds[j].sentence_index;
  };
  for (const auto& [pred, members] : by_predicate) {
    ForEachPair(members, [&](size_t i, size_t j) {
      if (options.pred_cross_only && same_sentence(i, j)) return;
      evidence[{i, j}].common_predicate = true;
    });
  }
  for (const auto& [head, members] : by_head) {
    ForEachPair(members, [&](size_t i, size_t j) {
      PairEvidence& ev = evidence[{i, j}];
      (same_sentence(i, j) ? ev.intra : ev.inter_exact) = true;
    });
  }
  for (const auto& [group, members] : by_group) {
    ForEachPair(members, [&](size_t i, size_t j) {
      if (same_sentence(i, j)) return;
      const auto& hi = group_heads[i].at(group);
      const auto& hj = group_heads[j].at(group);
      // Some pair of distinct heads exists unless both hold the same single head.
      if (hi.size() == 1 && hi == hj) return;
      evidence[{i, j}].inter_synonym = true;
    });
  }

  const EdgeWeights& w = options.weights;
  std::vector<Edge> edges;
  edges.reserve(evidence.size());
  for (const auto& [key, ev] : evidence) {
    Edge e;
    e.a = preds[key.first].id;
    e.b = preds[key.second].id;
    if (ev.common_predicate) {
      e.types.Insert(EdgeType::kCommonPredicate);
      e.weight += w.w_pred;
    }
    if (ev.intra) {
      e.types.Insert(EdgeType::kSharedArgumentIntra);
      e.weight += w.w_intra;
    }
    if (ev.inter_exact || ev.inter_synonym) {
      e.types.Insert(EdgeType::kSimilarArgumentInter);
      e.weight += ev.inter_exact ? w.w_inter : w.w_inter * w.synonym_discount;
    }
    if (!e.types.empty()) edges.push_back(e);
  }
  return CohesionGraph(std::move(preds), std::move(edges));
}

std::vector<std::set<int>> Components(const CohesionGraph& graph) {
  std::vector<std::set<int>> components;
  std::vector<bool> seen(graph.size(), false);
  for (size_t start = 0; start < graph.size(); ++start) {
    if (seen[start]) continue;
    std::set<int> component;
    std::vector<size_t> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      const size_t v = stack.back();
      stack.pop_back();
      component.insert(graph.nodes()[v].id);
      for (const auto& n : graph.neighbors(v)) {
        if (!seen[n.index]) {
          seen[n.index] = true;
          stack.push_back(n.index);
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

LinkageStats ComputeLinkageStats(const CohesionGraph& graph) {
  LinkageStats stats;
  stats.nodes = graph.size();
  stats.edges = graph.edges().size();
  const auto components = Components(graph);
  stats.components = components.size();
  for (const auto& c : components) {
    stats.largest_component = std::max(stats.largest_component, c.size());
    if (c.size() == 1) ++stats.isolated_nodes;
  }
  size_t inter = 0;
  for (const Edge& e : graph.edges()) {
    if (e.types.Has(EdgeType::kSimilarArgumentInter)) ++inter;
  }
  stats.inter_edge_fraction =
      stats.edges == 0 ? 0.0 : static_cast<double>(inter) / stats.edges;
  return stats;
}

GraphFormat ParseGraphFormat(std::string_view name) {
  if (name == "json") return GraphFormat::kJson;
  if (name == "dot") return GraphFormat::kDot;
  throw InvalidArgumentError("unknown graph format \"" + std::string(name) +
                             "\" (expected json or dot)");
}

std::string FormatNumber(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string ExportGraph(const CohesionGraph& graph, GraphFormat format) {
  if (format == GraphFormat::kJson) {
    OrderedJson j;
    j["nodes"] = OrderedJson::array();
    for (const Predication& p : graph.nodes()) j["nodes"].push_back(NodeJson(p));
    j["edges"] = OrderedJson::array();
    for (const Edge& e : graph.edges()) {
      OrderedJson je;
      je["a"] = e.a;
      je["b"] = e.b;
      je["types"] = OrderedJson::array();
      for (EdgeType t : e.types.Types()) je["types"].push_back(EdgeTypeName(t));
      je["w"] = e.weight;
      j["edges"].push_back(std::move(je));
    }
    return j.dump(2, ' ', false, OrderedJson::error_handler_t::replace) + "\n";
  }
  std::string out = "graph cohesion {\n";
  for (const Predication& p : graph.nodes()) {
    out += "  n" + std::to_string(p.id) + " [label=\"" + EscapeDot(Describe(p)) +
           "\"" + (p.complete ? "" : ", style=dashed") + "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) +
           " [label=\"" + e.types.ToString() + " " + FormatNumber(e.weight) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cohesia
