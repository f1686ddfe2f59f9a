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

#ifndef COHESIA_BASELINE_H_
#define COHESIA_BASELINE_H_

// Surface text-extraction baselines (statistical, locational and cue-word
// sentence selection), anaphora smoothing, key-term lists, and the metrics
// comparing engine output against them.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cohesia/cohesion.h"
#include "cohesia/ingest.h"
#include "cohesia/synthesize.h"

namespace cohesia {

enum class ExtractionMethod { kLuhn, kLead, kCue };

// "luhn", "lead" or "cue"; throws InvalidArgumentError otherwise.
ExtractionMethod ParseExtractionMethod(std::string_view name);
std::string_view ExtractionMethodName(ExtractionMethod method);

struct SentenceSelection {
  ExtractionMethod method = ExtractionMethod::kLead;
  std::vector<size_t> indices;  // Ascending source positions.
  std::vector<double> scores;   // One per document sentence.
};

// Fraction of distinct content lemmas treated as significant.
constexpr double kLuhnSignificantFraction = 0.1;
// Most insignificant words allowed between two words of one cluster.
constexpr size_t kLuhnMaxGap = 4;

// The top max(1, ceil(0.1 * distinct)) content lemmas by frequency, ties
// alphabetical.
std::set<std::string> SignificantLemmas(const Document& doc);

// Best significant-word cluster in `sentence`, scored count^2 / span length
// over word tokens.
double LuhnSentenceScore(const Sentence& sentence,
                         const std::set<std::string>& significant);

// Top m sentences by Luhn score, ties to the earlier sentence. Falls back to
// LeadExtract when the document has no content words.
SentenceSelection LuhnExtract(const Document& doc, size_t m);
// The first m sentences.
SentenceSelection LeadExtract(const Document& doc, size_t m);
// Top m by cue score, then location score, then position.
SentenceSelection CueExtract(const Document& doc, size_t m);
SentenceSelection Extract(ExtractionMethod method, const Document& doc, size_t m);

// Adds the predecessor of every selected sentence whose first content-bearing
// word is a pronoun, repeating for added sentences, so that smoothing twice
// equals smoothing once.
SentenceSelection Smooth(SentenceSelection selection, const Document& doc);

// Top n content lemmas by frequency, ties alphabetical.
std::vector<std::string> KeyTerms(const Document& doc, size_t n);

// |a ∩ b| / |a ∪ b|; 1 when both are empty.
double Jaccard(const std::vector<size_t>& a, const std::vector<size_t>& b);

constexpr size_t kCoverageKeyTerms = 10;

struct EvalReport {
  double term_coverage = 0.0;        // [0, 1]
  double jaccard_vs_baseline = 0.0;  // [0, 1]
  double compression_ratio = 0.0;    // (0, 1]
  LinkageStats component_stats;
};

// term_coverage: share of KeyTerms(doc, 10) among the summary's lemmas.
// compression_ratio: summary words / document words.
// Throws InvalidArgumentError when the summary came from another document.
EvalReport Evaluate(const SummaryOutput& summary, const Document& doc,
                    const std::vector<size_t>& engine_sentences,
                    const std::vector<size_t>& baseline_sentences,
                    const LinkageStats& stats, const Lexicon& lexicon);

std::string EvalReportJson(const EvalReport& report);

}  // namespace cohesia

#endif  // COHESIA_BASELINE_H_
