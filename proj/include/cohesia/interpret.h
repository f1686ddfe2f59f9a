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

#ifndef COHESIA_INTERPRET_H_
#define COHESIA_INTERPRET_H_

// Decomposition of sentences into atomic predications, local anaphor
// resolution, and the line-delimited JSON interchange format that lets an
// external parser supply predications instead.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohesia/ingest.h"
#include "cohesia/lexicon.h"

namespace cohesia {

constexpr size_t kMaxArguments = 3;
constexpr size_t kAnaphoraWindow = 2;

struct Argument {
  // Lemma of the semantic head. Empty only for an unresolved pronoun.
  std::string head;
  std::string surface;
  // 0 = pre-verbal, 1..2 = post-verbal.
  int role = 0;
  // Pronoun surface this argument was resolved from.
  std::optional<std::string> resolved_from;

  bool IsUnresolvedPronoun() const { return head.empty(); }
};

struct Predication {
  int id = 0;
  std::optional<std::string> predicate;
  std::vector<Argument> args;
  size_t sentence_index = 0;
  bool complete = false;
  Markedness markedness;

  // complete <=> predicate present, args non-empty, no unresolved pronoun.
  bool ComputeComplete() const;
};

// Identity over the interchange fields (id, predicate, argument head, surface
// and role, sentence, completeness). Markedness and resolved_from are
// annotations re-derived from the source document, not part of identity.
bool operator==(const Argument& a, const Argument& b);
bool operator==(const Predication& a, const Predication& b);

// One predication per verb group, arguments taken from the nearest noun
// heads around it within the clause; verbless clauses and surplus heads
// become fragmentary (predicate-less) predications. Pronoun arguments are
// left unresolved. Ids follow reading order starting at 0.
std::vector<Predication> ExtractPredications(const Document& doc,
                                             const Lexicon& lexicon);

// Replaces every pronoun argument with the most recent non-pronoun argument
// from the same or the previous kAnaphoraWindow sentences.
std::vector<Predication> ResolveAnaphors(std::vector<Predication> preds);

// ExtractPredications followed by ResolveAnaphors.
std::vector<Predication> Interpret(const Document& doc, const Lexicon& lexicon);

// Copies each sentence's markedness onto its predications.
std::vector<Predication> AttachMarkedness(std::vector<Predication> preds,
                                          const Document& doc);

// Interchange format: one JSON object per line,
//   {"id":int,"pred":string|null,"args":[{"head":string,"surface":string,
//    "role":int}],"sent":int,"complete":bool}
// UTF-8, LF line endings.
std::string ExportPredication(const Predication& p);
void ExportPredications(const std::vector<Predication>& preds, std::ostream& out);
std::string ExportPredications(const std::vector<Predication>& preds);

// Throws ParseError naming the line on malformed records and duplicate ids.
std::vector<Predication> IngestPredications(std::istream& in);
std::vector<Predication> IngestPredications(std::string_view text);

// Human-readable form, e.g. "approve(committee, budget)".
std::string Describe(const Predication& p);

}  // namespace cohesia

#endif  // COHESIA_INTERPRET_H_
