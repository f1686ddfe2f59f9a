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

#ifndef COHESIA_LEXICON_H_
#define COHESIA_LEXICON_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cohesia {

using WordSet = std::unordered_set<std::string>;

// Word-level resources used by ingestion and predication extraction. All
// tables hold lowercase entries. Loaded from a directory of plain-text files
// (one entry per line, '#' comments):
//
//   stopwords.txt  pronouns.txt  determiners.txt  conjunctions.txt
//   abbreviations.txt  verbs.txt  cue_bonus.txt  cue_stigma.txt
//   lemma_exceptions.txt ("<form> <lemma>" per line)
struct Lexicon {
  WordSet stopwords;
  WordSet pronouns;
  WordSet determiners;
  WordSet conjunctions;
  WordSet abbreviations;
  WordSet verbs;
  // Cue expressions, each a sequence of lowercase words.
  std::vector<std::vector<std::string>> cue_bonus;
  std::vector<std::vector<std::string>> cue_stigma;
  std::unordered_map<std::string, std::string> lemma_exceptions;

  // Reads every table from `dir`. Throws IoError when a file is missing.
  static Lexicon Load(const std::filesystem::path& dir);

  // The directory named by $COHESIA_DATA, else the data directory the
  // library was built with.
  static std::filesystem::path DefaultDataDir();

  // Lexicon::Load(DefaultDataDir()), loaded once.
  static const Lexicon& Default();
};

// Reads a one-entry-per-line word list, lowercasing entries and skipping
// blank lines and '#' comments.
WordSet ReadWordList(const std::filesystem::path& path);

// Groups of interchangeable lemmas for cross-sentence argument matching.
class SynonymTable {
 public:
  SynonymTable() = default;

  // One group per line, whitespace separated. A lemma listed in several
  // groups keeps its first group.
  static SynonymTable Load(const std::filesystem::path& path);
  static SynonymTable FromGroups(
      const std::vector<std::vector<std::string>>& groups);

  // True when a != b and both lemmas belong to the same group.
  bool Equivalent(std::string_view a, std::string_view b) const;

  // Group id of `lemma`, or -1.
  int GroupOf(std::string_view lemma) const;

  bool empty() const { return group_of_.empty(); }

 private:
  std::unordered_map<std::string, int> group_of_;
};

}  // namespace cohesia

#endif  // COHESIA_LEXICON_H_
