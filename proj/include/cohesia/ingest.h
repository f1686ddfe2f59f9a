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

#ifndef COHESIA_INGEST_H_
#define COHESIA_INGEST_H_

// Source text interpretation, first pass: sentence segmentation,
// tokenisation, lemmatisation, stopword tagging and markedness signals.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cohesia/lexicon.h"

namespace cohesia {

// Half-open byte range [begin, end) into Document::text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  std::string lemma;      // Non-empty, lowercase.
  bool is_word = false;   // Alphanumeric token (as opposed to punctuation).
  bool is_content = false;
  bool is_pronoun = false;
  Span span;

  bool operator==(const Token&) const = default;
};

// Non-structural salience of a sentence.
struct Markedness {
  double location_score = 0.0;  // [0, 1]
  double cue_score = 0.0;       // [-1, 1]
  bool in_title_overlap = false;

  bool operator==(const Markedness&) const = default;
};

struct Sentence {
  size_t index = 0;
  Span span;
  std::vector<Token> tokens;
  Markedness markedness;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::optional<std::string> title;
  std::string text;  // Body text; sentence and token spans index into it.
  std::vector<Sentence> sentences;
  std::set<size_t> paragraph_starts;

  size_t size() const { return sentences.size(); }
  std::string_view SentenceText(size_t index) const;
  // Number of word tokens over all sentences.
  size_t WordCount() const;

  bool operator==(const Document&) const = default;
};

using LemmaExceptions = std::unordered_map<std::string, std::string>;

// Lowercase lemma of `surface`: exception table first, then the suffix rules
// ies->y, es->"", s->"", ing->""(+e), ed->""(+e), ly->"". Rules are applied
// until none fires, so Lemmatize(Lemmatize(x)) == Lemmatize(x).
std::string Lemmatize(std::string_view surface,
                      const LemmaExceptions& exceptions);

// Tokenises `text`, whose first byte sits at `offset` in the enclosing
// document, and tags every token against `lexicon`.
std::vector<Token> Tokenize(std::string_view text, size_t offset,
                            const Lexicon& lexicon);

// Number of word tokens in `text`.
size_t CountWords(std::string_view text);

// Splits `text` into paragraphs (separated by blank lines) and sentences.
// A sentence ends at a run of . ! ? followed by whitespace and an uppercase
// letter, unless the word before a '.' is a listed abbreviation or a single
// letter. Paragraph ends always close a sentence. Markedness is left zero.
Document Segment(std::string_view text, const Lexicon& lexicon);

// Fills Sentence::markedness for every sentence of `doc`.
Document AnnotateMarkedness(Document doc, const Lexicon& lexicon);

// Full ingestion of raw file contents. A first line starting with "#TITLE "
// supplies the title and is not part of the body.
Document ParseDocument(std::string id, std::string_view raw,
                       const Lexicon& lexicon);

// Reads `path` and parses it; the id is the file stem.
Document LoadDocument(const std::filesystem::path& path,
                      const Lexicon& lexicon);

// Content lemmas of `text`, in first-occurrence order without duplicates.
std::vector<std::string> ContentLemmas(std::string_view text,
                                       const Lexicon& lexicon);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace cohesia

#endif  // COHESIA_INGEST_H_
