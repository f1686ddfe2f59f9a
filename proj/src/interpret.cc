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

#include "cohesia/interpret.h"

#include <algorithm>
#include <cctype>

namespace cohesia {
namespace {

enum class ItemKind { kNoun, kPronoun, kVerb };

struct Item {
  ItemKind kind;
  size_t token;  // Head token within the sentence.
};

struct Clause {
  std::vector<Item> items;
  bool has_verb = false;
  // Started at the sentence start or after ; : ! ?
  bool hard_start = true;
};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsClauseBreak(const Token& t) {
  return !t.is_word &&
         (t.surface == ";" || t.surface == ":" || t.surface == "!" ||
          t.surface == "?");
}

// Per-token lexical classes needed by the clause scanner.
struct TokenClasses {
  std::vector<bool> verb;
  std::vector<bool> adverb;
};

TokenClasses Classify(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  const size_t n = tokens.size();
  TokenClasses c{std::vector<bool>(n, false), std::vector<bool>(n, false)};
  const Token* prev_word = nullptr;
  for (size_t i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (!t.is_word) continue;
    const std::string lower = Lower(t.surface);
    if (t.is_content) {
      const bool after_determiner =
          prev_word != nullptr &&
          lexicon.determiners.count(Lower(prev_word->surface)) > 0;
      const bool ed_form =
          lower.size() >= 5 && lower.ends_with("ed") && t.lemma != lower;
      c.verb[i] = !after_determiner &&
                  (lexicon.verbs.count(t.lemma) > 0 || ed_form);
      c.adverb[i] = !c.verb[i] && lower.ends_with("ly") && t.lemma != lower;
    }
    prev_word = &t;
  }
  // Of two adjacent verb candidates only the second is the verb.
  for (size_t i = 0; i + 1 < n; ++i) {
    if (c.verb[i] && c.verb[i + 1]) c.verb[i] = false;
  }
  return c;
}

std::vector<Clause> ScanClauses(const std::vector<Token>& tokens,
                                const Lexicon& lexicon) {
  const TokenClasses classes = Classify(tokens, lexicon);
  std::vector<Clause> pieces(1);
  std::optional<size_t> run_head;
  bool only_stopwords_since_verb = false;

  auto flush_run = [&] {
    if (run_head) {
      pieces.back().items.push_back({ItemKind::kNoun, *run_head});
      run_head.reset();
      only_stopwords_since_verb = false;
    }
  };
  auto new_piece = [&](bool hard) {
    flush_run();
    Clause c;
    c.hard_start = hard;
    pieces.push_back(std::move(c));
    only_stopwords_since_verb = false;
  };

  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.is_word) {
      if (IsClauseBreak(t)) {
        new_piece(/*hard=*/true);
      } else if (t.surface != ".") {
        // Abbreviation periods stay inside a noun run; other marks end it.
        flush_run();
        only_stopwords_since_verb = false;
      }
      continue;
    }
    const std::string lower = Lower(t.surface);
    if (!t.is_content && !t.is_pronoun && lexicon.conjunctions.count(lower) > 0) {
      new_piece(/*hard=*/false);
      continue;
    }
    if (classes.verb[i]) {
      flush_run();
      Clause& piece = pieces.back();
      if (only_stopwords_since_verb && !piece.items.empty() &&
          piece.items.back().kind == ItemKind::kVerb) {
        piece.items.back().token = i;
      } else {
        piece.items.push_back({ItemKind::kVerb, i});
      }
      piece.has_verb = true;
      only_stopwords_since_verb = true;
      continue;
    }
    if (t.is_pronoun) {
      flush_run();
      const bool determiner_use =
          lexicon.determiners.count(lower) > 0 && i + 1 < tokens.size() &&
          tokens[i + 1].is_content && !classes.verb[i + 1];
      if (!determiner_use) {
        pieces.back().items.push_back({ItemKind::kPronoun, i});
        only_stopwords_since_verb = false;
      }
      continue;
    }
    if (classes.adverb[i]) {
      flush_run();
      continue;
    }
    if (t.is_content) {
      run_head = i;
      continue;
    }
    flush_run();
  }
  flush_run();

  // A verbless piece after a conjunction continues the preceding clause.
  std::vector<Clause> clauses;
  for (Clause& piece : pieces) {
    if (piece.items.empty()) continue;
    if (!piece.has_verb && !piece.hard_start && !clauses.empty()) {
      auto& into = clauses.back().items;
      into.insert(into.end(), piece.items.begin(), piece.items.end());
    } else {
      clauses.push_back(std::move(piece));
    }
  }
  return clauses;
}

Argument MakeArgument(const Token& t, ItemKind kind, int role) {
  Argument a;
  a.head = kind == ItemKind::kPronoun ? std::string() : t.lemma;
  a.surface = t.surface;
  a.role = role;
  return a;
}

struct Anchored {
  size_t anchor;
  Predication pred;
};

void EmitFragments(const std::vector<Item>& args, const Sentence& s,
                   std::vector<Anchored>& out) {
  for (size_t i = 0; i < args.size(); i += kMaxArguments) {
    Predication p;
    p.sentence_index = s.index;
    p.markedness = s.markedness;
    const size_t end = std::min(args.size(), i + kMaxArguments);
    for (size_t k = i; k < end; ++k) {
      p.args.push_back(MakeArgument(s.tokens[args[k].token], args[k].kind,
                                    static_cast<int>(k - i)));
    }
    p.complete = p.ComputeComplete();
    out.push_back({args[i].token, std::move(p)});
  }
}

void EmitClause(const Clause& clause, const Sentence& s,
                std::vector<Anchored>& out) {
  const auto& items = clause.items;
  auto is_arg = [&](size_t k) { return items[k].kind != ItemKind::kVerb; };
  if (!clause.has_verb) {
    EmitFragments(items, s, out);
    return;
  }
  std::vector<bool> used(items.size(), false);
  for (size_t v = 0; v < items.size(); ++v) {
    if (items[v].kind != ItemKind::kVerb) continue;
    Predication p;
    p.sentence_index = s.index;
    p.markedness = s.markedness;
    p.predicate = s.tokens[items[v].token].lemma;
    for (size_t k = v; k-- > 0;) {
      if (is_arg(k)) {
        p.args.push_back(MakeArgument(s.tokens[items[k].token], items[k].kind, 0));
        used[k] = true;
        break;
      }
    }
    int role = 1;
    for (size_t k = v + 1; k < items.size() && role < static_cast<int>(kMaxArguments); ++k) {
      if (!is_arg(k)) break;
      p.args.push_back(MakeArgument(s.tokens[items[k].token], items[k].kind, role++));
      used[k] = true;
    }
    p.complete = p.ComputeComplete();
    out.push_back({items[v].token, std::move(p)});
  }
  std::vector<Item> leftover;
  for (size_t k = 0; k < items.size(); ++k) {
    if (is_arg(k) && !used[k]) leftover.push_back(items[k]);
  }
  EmitFragments(leftover, s, out);
}

}  // namespace

bool Predication::ComputeComplete() const {
  return predicate.has_value() && !args.empty() &&
         std::none_of(args.begin(), args.end(), [](const Argument& a) {
           return a.IsUnresolvedPronoun();
         });
}

bool operator==(const Argument& a, const Argument& b) {
  return a.head == b.head && a.surface == b.surface && a.role == b.role;
}

bool operator==(const Predication& a, const Predication& b) {
  return a.id == b.id && a.predicate == b.predicate && a.args == b.args &&
         a.sentence_index == b.sentence_index && a.complete == b.complete;
}

std::vector<Predication> ExtractPredications(const Document& doc,
                                             const Lexicon& lexicon) {
  std::vector<Predication> preds;
  int next_id = 0;
  for (const Sentence& s : doc.sentences) {
    std::vector<Anchored> anchored;
    for (const Clause& clause : ScanClauses(s.tokens, lexicon)) {
      EmitClause(clause, s, anchored);
    }
    std::stable_sort(anchored.begin(), anchored.end(),
                     [](const Anchored& a, const Anchored& b) {
                       return a.anchor < b.anchor;
                     });
    for (Anchored& a : anchored) {
      a.pred.id = next_id++;
      preds.push_back(std::move(a.pred));
    }
  }
  return preds;
}

std::vector<Predication> ResolveAnaphors(std::vector<Predication> preds) {
  struct Mention {
    size_t sentence;
    const Argument* arg;
  };
  std::vector<Mention> history;
  for (Predication& p : preds) {
    for (Argument& a : p.args) {
      if (!a.IsUnresolvedPronoun()) {
        if (!a.resolved_from) history.push_back({p.sentence_index, &a});
        continue;
      }
      for (auto it = history.rbegin(); it != history.rend(); ++it) {
        if (it->sentence + kAnaphoraWindow < p.sentence_index) break;
        a.resolved_from = a.surface;
        a.head = it->arg->head;
        a.surface = it->arg->surface;
        break;
      }
    }
    p.complete = p.ComputeComplete();
  }
  return preds;
}

std::vector<Predication> Interpret(const Document& doc, const Lexicon& lexicon) {
  return ResolveAnaphors(ExtractPredications(doc, lexicon));
}

std::vector<Predication> AttachMarkedness(std::vector<Predication> preds,
                                          const Document& doc) {
  for (Predication& p : preds) {
    if (p.sentence_index < doc.sentences.size()) {
      p.markedness = doc.sentences[p.sentence_index].markedness;
    }
  }
  return preds;
}

std::string Describe(const Predication& p) {
  std::string out = p.predicate.value_or("");
  out += '(';
  for (size_t i = 0; i < p.args.size(); ++i) {
    if (i > 0) out += ", ";
    const Argument& a = p.args[i];
    out += a.IsUnresolvedPronoun() ? "?" + Lower(a.surface) : a.head;
  }
  out += ')';
  return out;
}

}  // namespace cohesia
