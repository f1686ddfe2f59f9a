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

#include "cohesia/lexicon.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cohesia/error.h"

#ifndef COHESIA_DATA_DIR
#define COHESIA_DATA_DIR "data"
#endif

namespace cohesia {
namespace {

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Calls `fn` with the whitespace-split fields of every non-comment line.
template <typename Fn>
void ForEachRecord(const std::filesystem::path& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> words;
    std::string word;
    while (fields >> word) words.push_back(Lower(word));
    if (words.empty() || words.front().front() == '#') continue;
    fn(words);
  }
}

std::vector<std::vector<std::string>> ReadPhrases(
    const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> phrases;
  ForEachRecord(path, [&](const std::vector<std::string>& words) {
    phrases.push_back(words);
  });
  return phrases;
}

bool IsConsonant(char c) { return std::string_view("aeiou").find(c) == std::string_view::npos; }

// Third person, past and progressive forms of a regular verb.
std::vector<std::string> RegularInflections(const std::string& verb) {
  const size_t n = verb.size();
  if (n < 2) return {};
  const char last = verb[n - 1];
  const std::string_view v(verb);
  if (last == 'e') {
    return {verb + "s", verb + "d", verb.substr(0, n - 1) + "ing"};
  }
  if (last == 'y' && IsConsonant(verb[n - 2])) {
    const std::string stem = verb.substr(0, n - 1);
    return {stem + "ies", stem + "ied", verb + "ing"};
  }
  const bool sibilant = last == 's' || last == 'x' || last == 'z' || last == 'o' ||
                        v.ends_with("ch") || v.ends_with("sh");
  return {verb + (sibilant ? "es" : "s"), verb + "ed", verb + "ing"};
}

}  // namespace

WordSet ReadWordList(const std::filesystem::path& path) {
  WordSet words;
  ForEachRecord(path, [&](const std::vector<std::string>& fields) {
    words.insert(fields.front());
  });
  return words;
}

Lexicon Lexicon::Load(const std::filesystem::path& dir) {
  Lexicon lex;
  lex.stopwords = ReadWordList(dir / "stopwords.txt");
  lex.pronouns = ReadWordList(dir / "pronouns.txt");
  lex.determiners = ReadWordList(dir / "determiners.txt");
  lex.conjunctions = ReadWordList(dir / "conjunctions.txt");
  lex.abbreviations = ReadWordList(dir / "abbreviations.txt");
  lex.verbs = ReadWordList(dir / "verbs.txt");
  lex.cue_bonus = ReadPhrases(dir / "cue_bonus.txt");
  lex.cue_stigma = ReadPhrases(dir / "cue_stigma.txt");
  ForEachRecord(dir / "lemma_exceptions.txt",
                [&](const std::vector<std::string>& fields) {
                  if (fields.size() != 2) return;
                  lex.lemma_exceptions[fields[0]] = fields[1];
                });
  // Regular inflections of listed verbs resolve exactly, without relying on
  // the suffix heuristics (which cannot tell "debated" from "batted").
  for (const std::string& verb : lex.verbs) {
    for (std::string& form : RegularInflections(verb)) {
      lex.lemma_exceptions.emplace(std::move(form), verb);
    }
  }
  // Every lemma is its own lemma; keeps lemmatisation idempotent.
  std::vector<std::string> targets;
  for (const auto& [form, lemma] : lex.lemma_exceptions) targets.push_back(lemma);
  for (const auto& lemma : targets) lex.lemma_exceptions.emplace(lemma, lemma);
  return lex;
}

std::filesystem::path Lexicon::DefaultDataDir() {
  if (const char* env = std::getenv("COHESIA_DATA"); env != nullptr && *env) {
    return env;
  }
  return COHESIA_DATA_DIR;
}

const Lexicon& Lexicon::Default() {
  static const Lexicon* lexicon = new Lexicon(Load(DefaultDataDir()));
  return *lexicon;
}

SynonymTable SynonymTable::Load(const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> groups;
  ForEachRecord(path, [&](const std::vector<std::string>& words) {
    groups.push_back(words);
  });
  return FromGroups(groups);
}

SynonymTable SynonymTable::FromGroups(
    const std::vector<std::vector<std::string>>& groups) {
  SynonymTable table;
  for (size_t g = 0; g < groups.size(); ++g) {
    for (const auto& word : groups[g]) {
      table.group_of_.emplace(Lower(word), static_cast<int>(g));
    }
  }
  return table;
}

int SynonymTable::GroupOf(std::string_view lemma) const {
  auto it = group_of_.find(std::string(lemma));
  return it == group_of_.end() ? -1 : it->second;
}

bool SynonymTable::Equivalent(std::string_view a, std::string_view b) const {
  if (a == b) return false;
  int ga = GroupOf(a);
  return ga >= 0 && ga == GroupOf(b);
}

}  // namespace cohesia
