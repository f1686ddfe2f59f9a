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

#include "cohesia/baseline.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "cohesia/error.h"
#include "json.hpp"

namespace cohesia {
namespace {

std::vector<std::pair<std::string, size_t>> LemmaFrequencies(const Document& doc) {
  std::map<std::string, size_t> counts;
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) {
      if (t.is_content) ++counts[t.lemma];
    }
  }
  std::vector<std::pair<std::string, size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  return ranked;
}

// Top m of `scores` (higher first, ties to the earlier sentence), ascending.
std::vector<size_t> TopM(const std::vector<double>& scores, size_t m) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return scores[x] > scores[y]; });
  order.resize(std::min(m, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

bool StartsWithAnaphor(const Sentence& s) {
  for (const Token& t : s.tokens) {
    if (t.is_pronoun) return true;
    if (t.is_content) return false;
  }
  return false;
}

}  // namespace

ExtractionMethod ParseExtractionMethod(std::string_view name) {
  if (name == "luhn") return ExtractionMethod::kLuhn;
  if (name == "lead") return ExtractionMethod::kLead;
  if (name == "cue") return ExtractionMethod::kCue;
  throw InvalidArgumentError("unknown baseline \"" + std::string(name) +
                             "\" (expected luhn, lead or cue)");
}

std::string_view ExtractionMethodName(ExtractionMethod method) {
  switch (method) {
    case ExtractionMethod::kLuhn:
      return "luhn";
    case ExtractionMethod::kLead:
      return "lead";
    case ExtractionMethod::kCue:
      return "cue";
  }
  return "";
}

std::set<std::string> SignificantLemmas(const Document& doc) {
  const auto ranked = LemmaFrequencies(doc);
  std::set<std::string> significant;
  if (ranked.empty()) return significant;
  const auto wanted = static_cast<size_t>(
      std::ceil(kLuhnSignificantFraction * static_cast<double>(ranked.size())));
  for (size_t i = 0; i < std::max<size_t>(1, wanted); ++i) {
    significant.insert(ranked[i].first);
  }
  return significant;
}

double LuhnSentenceScore(const Sentence& sentence,
                         const std::set<std::string>& significant) {
  std::vector<size_t> hits;  // Positions among word tokens.
  size_t position = 0;
  for (const Token& t : sentence.tokens) {
    if (!t.is_word) continue;
    if (t.is_content && significant.count(t.lemma) > 0) hits.push_back(position);
    ++position;
  }
  double best = 0.0;
  size_t start = 0;
  for (size_t i = 0; i < hits.size(); ++i) {
    const bool closes = i + 1 == hits.size() || hits[i + 1] - hits[i] - 1 > kLuhnMaxGap;
    if (!closes) continue;
    const double count = static_cast<double>(i - start + 1);
    const double length = static_cast<double>(hits[i] - hits[start] + 1);
    best = std::max(best, count * count / length);
    start = i + 1;
  }
  return best;
}

SentenceSelection LeadExtract(const Document& doc, size_t m) {
  SentenceSelection sel;
  sel.method = ExtractionMethod::kLead;
  const size_t n = doc.size();
  for (size_t i = 0; i < n; ++i) {
    sel.scores.push_back(static_cast<double>(n - i) / static_cast<double>(n));
  }
  for (size_t i = 0; i < std::min(m, n); ++i) sel.indices.push_back(i);
  return sel;
}

SentenceSelection LuhnExtract(const Document& doc, size_t m) {
  const std::set<std::string> significant = SignificantLemmas(doc);
  if (significant.empty()) return LeadExtract(doc, m);
  SentenceSelection sel;
  sel.method = ExtractionMethod::kLuhn;
  for (const Sentence& s : doc.sentences) {
    sel.scores.push_back(LuhnSentenceScore(s, significant));
  }
  sel.indices = TopM(sel.scores, m);
  return sel;
}

SentenceSelection CueExtract(const Document& doc, size_t m) {
  SentenceSelection sel;
  sel.method = ExtractionMethod::kCue;
  std::vector<size_t> order(doc.size());
  std::iota(order.begin(), order.end(), size_t{0});
  for (const Sentence& s : doc.sentences) sel.scores.push_back(s.markedness.cue_score);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const Markedness& a = doc.sentences[x].markedness;
    const Markedness& b = doc.sentences[y].markedness;
    if (a.cue_score != b.cue_score) return a.cue_score > b.cue_score;
    return a.location_score > b.location_score;
  });
  order.resize(std::min(m, order.size()));
  std::sort(order.begin(), order.end());
  sel.indices = std::move(order);
  return sel;
}

SentenceSelection Extract(ExtractionMethod method, const Document& doc, size_t m) {
  switch (method) {
    case ExtractionMethod::kLuhn:
      return LuhnExtract(doc, m);
    case ExtractionMethod::kCue:
      return CueExtract(doc, m);
    case ExtractionMethod::kLead:
      break;
  }
  return LeadExtract(doc, m);
}

SentenceSelection Smooth(SentenceSelection selection, const Document& doc) {
  std::set<size_t> chosen(selection.indices.begin(), selection.indices.end());
  std::vector<size_t> pending(chosen.begin(), chosen.end());
  while (!pending.empty()) {
    const size_t i = pending.back();
    pending.pop_back();
    if (i == 0 || i >= doc.size() || !StartsWithAnaphor(doc.sentences[i])) continue;
    if (chosen.insert(i - 1).second) pending.push_back(i - 1);
  }
  selection.indices.assign(chosen.begin(), chosen.end());
  return selection;
}

std::vector<std::string> KeyTerms(const Document& doc, size_t n) {
  std::vector<std::string> terms;
  for (const auto& [lemma, count] : LemmaFrequencies(doc)) {
    if (terms.size() == n) break;
    terms.push_back(lemma);
  }
  return terms;
}

double Jaccard(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  const std::set<size_t> sa(a.begin(), a.end());
  const std::set<size_t> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  size_t common = 0;
  for (size_t x : sa) common += sb.count(x);
  return static_cast<double>(common) /
         static_cast<double>(sa.size() + sb.size() - common);
}

EvalReport Evaluate(const SummaryOutput& summary, const Document& doc,
                    const std::vector<size_t>& engine_sentences,
                    const std::vector<size_t>& baseline_sentences,
                    const LinkageStats& stats, const Lexicon& lexicon) {
  if (summary.source_doc_id != doc.id) {
    throw InvalidArgumentError("summary of \"" + summary.source_doc_id +
                               "\" evaluated against document \"" + doc.id + "\"");
  }
  EvalReport report;
  std::set<std::string> summary_lemmas;
  for (const RenderedFragment& f : summary.fragments) {
    for (const Token& t : Tokenize(f.text, 0, lexicon)) {
      if (t.is_word) summary_lemmas.insert(t.lemma);
    }
  }
  const auto terms = KeyTerms(doc, kCoverageKeyTerms);
  if (!terms.empty()) {
    size_t present = 0;
    for (const auto& term : terms) present += summary_lemmas.count(term);
    report.term_coverage = static_cast<double>(present) / static_cast<double>(terms.size());
  }
  report.jaccard_vs_baseline = Jaccard(engine_sentences, baseline_sentences);
  const size_t doc_words = doc.WordCount();
  if (doc_words > 0) {
    report.compression_ratio = std::min(
        1.0, static_cast<double>(summary.WordCount()) / static_cast<double>(doc_words));
  }
  report.component_stats = stats;
  return report;
}

std::string EvalReportJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["term_coverage"] = report.term_coverage;
  j["jaccard_vs_baseline"] = report.jaccard_vs_baseline;
  j["compression_ratio"] = report.compression_ratio;
  const LinkageStats& s = report.component_stats;
  j["component_stats"] = {{"nodes", s.nodes},
                          {"edges", s.edges},
                          {"components", s.components},
                          {"largest_component", s.largest_component},
                          {"isolated_nodes", s.isolated_nodes},
                          {"inter_edge_fraction", s.inter_edge_fraction}};
  return j.dump();
}

}  // namespace cohesia
