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

#include "cohesia/pipeline.h"

#include <algorithm>
#include <map>
#include <set>

#include "cohesia/error.h"
#include "json.hpp"

namespace cohesia {

SummaryResult SummarizePredications(std::string doc_id,
                                    std::vector<Predication> preds,
                                    const EngineOptions& options) {
  if (preds.empty()) {
    throw InvalidArgumentError("document \"" + doc_id + "\" yields no predications");
  }
  options.params.Validate();
  SummaryResult result;
  result.doc_id = std::move(doc_id);
  result.graph = BuildGraph(std::move(preds), options.graph_options());
  const size_t k = options.budget_k.value_or(
      BudgetFromRatio(options.params.compression_ratio, result.graph.size()));
  result.selection = GreedySelect(result.graph, k, options.params.score_weights);
  result.clusters = Cluster(result.selection, result.graph);
  result.output = Render(result.clusters, result.graph,
                         options.params.output_format, result.doc_id);
  return result;
}

SummaryResult SummarizeDocument(const Document& doc, const Lexicon& lexicon,
                                const EngineOptions& options) {
  return SummarizePredications(doc.id, Interpret(doc, lexicon), options);
}

std::vector<size_t> SelectedSentences(const SummaryResult& result) {
  std::set<size_t> touched;
  for (int id : result.selection.node_ids) {
    touched.insert(result.graph.nodes()[result.graph.IndexOf(id)].sentence_index);
  }
  return ProjectToSentences(result.selection, result.graph, touched.size());
}

std::vector<std::string> SelectionKeyTerms(const SummaryResult& result) {
  std::map<std::string, int> counts;
  for (int id : result.selection.node_ids) {
    const Predication& p = result.graph.nodes()[result.graph.IndexOf(id)];
    if (p.predicate) ++counts[*p.predicate];
    for (const Argument& a : p.args) {
      if (!a.head.empty()) ++counts[a.head];
    }
  }
  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  std::vector<std::string> terms;
  for (auto& [term, count] : ranked) terms.push_back(term);
  return terms;
}

std::string RenderProjection(const SummaryResult& result, const Document* doc,
                             ProjectionMode mode, std::optional<size_t> m) {
  switch (mode) {
    case ProjectionMode::kPredications:
      return result.output.ToText();
    case ProjectionMode::kKeyterms: {
      std::string out;
      for (const auto& term : SelectionKeyTerms(result)) out += term + "\n";
      return out;
    }
    case ProjectionMode::kSentences:
      break;
  }
  const std::vector<size_t> sentences =
      m ? ProjectToSentences(result.selection, result.graph, *m)
        : SelectedSentences(result);
  std::string out;
  for (size_t i : sentences) {
    out += "[" + std::to_string(i) + "]";
    if (doc != nullptr && i < doc->size()) {
      out += " " + std::string(doc->SentenceText(i));
    }
    out += "\n";
  }
  return out;
}

std::string ExplainJson(const SummaryResult& result, const EngineOptions& options) {
  nlohmann::ordered_json j;
  j["doc"] = result.doc_id;
  j["nodes"] = result.graph.size();
  j["edges"] = result.graph.edges().size();
  j["k"] = result.selection.budget_k;
  j["selected"] = result.selection.node_ids;
  const ScoreBreakdown& b = result.selection.breakdown;
  j["breakdown"] = {{"centrality", b.centrality},
                    {"representativeness", b.representativeness},
                    {"coherence", b.coherence},
                    {"prior", b.prior},
                    {"total", b.total}};
  const ScoreWeights& w = options.params.score_weights;
  j["score_weights"] = {{"alpha", w.alpha}, {"beta", w.beta},
                        {"gamma", w.gamma}, {"delta", w.delta}};
  const EdgeWeights& e = options.params.edge_weights;
  j["edge_weights"] = {{"w_pred", e.w_pred},
                       {"w_intra", e.w_intra},
                       {"w_inter", e.w_inter},
                       {"synonym_discount", e.synonym_discount}};
  j["clusters"] = nlohmann::ordered_json::array();
  for (const TopicCluster& c : result.clusters) {
    j["clusters"].push_back({{"label", c.label}, {"members", c.members}});
  }
  return j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace cohesia
