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

#include "cohesia/ingest.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cohesia/error.h"

namespace cohesia {
namespace {

constexpr int kMaxLemmaPasses = 8;

bool IsSpaceByte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsAsciiDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct CodePoint {
  char32_t value;
  size_t length;
};

// Decodes one UTF-8 sequence at `i`; malformed bytes decode as U+FFFD.
CodePoint Decode(std::string_view s, size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  size_t len = b0 >= 0xF0 ? 4 : b0 >= 0xE0 ? 3 : b0 >= 0xC0 ? 2 : 0;
  if (len == 0 || i + len > s.size()) return {0xFFFD, 1};
  char32_t cp = b0 & (0x3F >> (len - 1));
  for (size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

enum class CharClass { kSpace, kWord, kPunct };

CharClass Classify(char32_t cp) {
  if (cp < 0x80) {
    const auto c = static_cast<char>(cp);
    if (IsSpaceByte(c)) return CharClass::kSpace;
    if (std::isalnum(static_cast<unsigned char>(c))) return CharClass::kWord;
    return CharClass::kPunct;
  }
  if (cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x202F ||
      cp == 0x205F || cp == 0x3000) {
    return CharClass::kSpace;
  }
  if ((cp >= 0xA1 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 ||
      (cp >= 0x2010 && cp <= 0x206F) || (cp >= 0x3001 && cp <= 0x303F) ||
      cp == 0xFFFD) {
    return CharClass::kPunct;
  }
  return CharClass::kWord;
}

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

// Characters allowed inside a word when followed by another word character.
bool IsJoiner(char32_t cp) {
  return IsApostrophe(cp) || cp == '-' || cp == '.' || cp == ',';
}

bool IsVowel(std::string_view w, size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    case 'y':
      return i > 0 && !IsVowel(w, i - 1);
    default:
      return false;
  }
}

bool HasVowel(std::string_view w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (IsVowel(w, i)) return true;
  }
  return false;
}

// Number of vowel-consonant sequences, as in [C](VC)^m[V].
int Measure(std::string_view w) {
  int m = 0;
  bool prev_vowel = false;
  for (size_t i = 0; i < w.size(); ++i) {
    const bool v = IsVowel(w, i);
    if (!v && prev_vowel) ++m;
    prev_vowel = v;
  }
  return m;
}

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

// Restores the stem of an -ing/-ed form: undoubles a final consonant pair
// or puts back a dropped final 'e'.
std::string RestoreStem(std::string stem) {
  const size_t n = stem.size();
  const char last = stem[n - 1];
  if (n >= 2 && last == stem[n - 2] && !IsVowel(stem, n - 1) &&
      last != 'l' && last != 's' && last != 'z') {
    stem.pop_back();
    return stem;
  }
  const bool cvc = n >= 3 && !IsVowel(stem, n - 3) && IsVowel(stem, n - 2) &&
                   !IsVowel(stem, n - 1) && last != 'w' && last != 'x' &&
                   last != 'y';
  if (last == 'v' || last == 'c' ||
      (last == 'u' && n >= 2 && !IsVowel(stem, n - 2)) ||
      (last == 's' && n >= 3 && IsVowel(stem, n - 2) && IsVowel(stem, n - 3)) ||
      EndsWith(stem, "rg") || EndsWith(stem, "dg") || EndsWith(stem, "ang") ||
      (cvc && Measure(stem) == 1)) {
    stem.push_back('e');
  }
  return stem;
}

// Applies the first matching suffix rule; returns false when none fires.
bool StripSuffix(std::string& w) {
  const size_t n = w.size();
  if (EndsWith(w, "ies") && n > 4) {
    w.replace(n - 3, 3, "y");
    return true;
  }
  if (EndsWith(w, "es") && n > 4) {
    std::string_view stem(w.data(), n - 2);
    if (EndsWith(stem, "ss") || EndsWith(stem, "x") || EndsWith(stem, "z") ||
        EndsWith(stem, "ch") || EndsWith(stem, "sh")) {
      w.resize(n - 2);
      return true;
    }
  }
  if (EndsWith(w, "s") && n >= 4 && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    w.pop_back();
    return true;
  }
  if (EndsWith(w, "ing") && n >= 6) {
    std::string stem = w.substr(0, n - 3);
    if (HasVowel(stem)) {
      w = RestoreStem(std::move(stem));
      return true;
    }
  }
  if (EndsWith(w, "ied") && n > 4) {
    w.replace(n - 3, 3, "y");
    return true;
  }
  if (EndsWith(w, "ed") && !EndsWith(w, "eed") && n >= 5) {
    std::string stem = w.substr(0, n - 2);
    if (HasVowel(stem)) {
      w = RestoreStem(std::move(stem));
      return true;
    }
  }
  if (EndsWith(w, "ily") && n >= 6) {
    w.replace(n - 3, 3, "y");
    return true;
  }
  if (EndsWith(w, "ly") && n >= 6) {
    w.resize(n - 2);
    return true;
  }
  return false;
}

Token MakeToken(std::string_view surface, size_t begin, bool is_word,
                const Lexicon& lexicon) {
  Token t;
  t.surface = std::string(surface);
  t.span = {begin, begin + surface.size()};
  t.is_word = is_word;
  if (!is_word) {
    t.lemma = t.surface;
    return t;
  }
  t.lemma = Lemmatize(surface, lexicon.lemma_exceptions);
  const std::string lower = AsciiLower(surface);
  t.is_pronoun = lexicon.pronouns.count(lower) > 0;
  t.is_content = !t.is_pronoun && lexicon.stopwords.count(lower) == 0 &&
                 lexicon.stopwords.count(t.lemma) == 0;
  return t;
}

bool IsSentenceInitial(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') ||
         (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

bool IsOpener(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x201C ||
         cp == 0x2018;
}

bool IsCloser(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x201D ||
         cp == 0x2019;
}

// True when the '.' at `dot` ends an abbreviation or an initial.
bool IsAbbreviation(std::string_view text, size_t dot, const Lexicon& lexicon) {
  size_t start = dot;
  while (start > 0 && (std::isalnum(static_cast<unsigned char>(text[start - 1])) ||
                       text[start - 1] == '.')) {
    --start;
  }
  if (start == dot) return false;
  const std::string word = AsciiLower(text.substr(start, dot - start));
  if (word.size() == 1 && IsAsciiAlpha(word[0])) return true;
  return lexicon.abbreviations.count(word) > 0;
}

// If a sentence boundary follows the terminator run starting at `i`, returns
// the end offset of the sentence; otherwise returns npos.
size_t BoundaryAfter(std::string_view text, size_t i, size_t limit,
                     const Lexicon& lexicon) {
  size_t j = i;
  while (j < limit && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
  const bool single_dot = j == i + 1 && text[i] == '.';
  while (j < limit) {
    const CodePoint cp = Decode(text, j);
    if (!IsCloser(cp.value)) break;
    j += cp.length;
  }
  const size_t end = j;
  size_t k = j;
  while (k < limit && IsSpaceByte(text[k])) ++k;
  if (k == j || k >= limit) return std::string_view::npos;
  CodePoint next = Decode(text, k);
  while (IsOpener(next.value) && k + next.length < limit) {
    k += next.length;
    next = Decode(text, k);
  }
  if (!IsSentenceInitial(next.value)) return std::string_view::npos;
  if (single_dot && IsAbbreviation(text, i, lexicon)) {
    return std::string_view::npos;
  }
  return end;
}

struct Range {
  size_t begin;
  size_t end;
};

// Maximal runs of non-blank lines.
std::vector<Range> Paragraphs(std::string_view text) {
  std::vector<Range> paragraphs;
  size_t pos = 0;
  bool open = false;
  Range current{0, 0};
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    const bool blank = std::all_of(line.begin(), line.end(), IsSpaceByte);
    if (blank) {
      if (open) paragraphs.push_back(current);
      open = false;
    } else {
      if (!open) current.begin = pos;
      current.end = eol;
      open = true;
    }
    pos = eol + 1;
  }
  if (open) paragraphs.push_back(current);
  return paragraphs;
}

Range Trim(std::string_view text, Range r) {
  while (r.begin < r.end && IsSpaceByte(text[r.begin])) ++r.begin;
  while (r.end > r.begin && IsSpaceByte(text[r.end - 1])) --r.end;
  return r;
}

}  // namespace

std::string_view Document::SentenceText(size_t index) const {
  const Span& s = sentences.at(index).span;
  return std::string_view(text).substr(s.begin, s.size());
}

size_t Document::WordCount() const {
  size_t n = 0;
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) n += t.is_word ? 1 : 0;
  }
  return n;
}

std::string Lemmatize(std::string_view surface,
                      const LemmaExceptions& exceptions) {
  std::string w = AsciiLower(surface);
  for (int pass = 0; pass < kMaxLemmaPasses; ++pass) {
    if (auto it = exceptions.find(w); it != exceptions.end()) return it->second;
    if (!StripSuffix(w)) break;
  }
  return w;
}

std::vector<Token> Tokenize(std::string_view text, size_t offset,
                            const Lexicon& lexicon) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const CodePoint cp = Decode(text, i);
    const CharClass cls = Classify(cp.value);
    if (cls == CharClass::kSpace) {
      i += cp.length;
      continue;
    }
    if (cls == CharClass::kPunct) {
      tokens.push_back(MakeToken(text.substr(i, cp.length), offset + i,
                                 /*is_word=*/false, lexicon));
      i += cp.length;
      continue;
    }
    size_t j = i + cp.length;
    while (j < text.size()) {
      const CodePoint c = Decode(text, j);
      const CharClass k = Classify(c.value);
      if (k == CharClass::kWord) {
        j += c.length;
        continue;
      }
      if (!IsJoiner(c.value) || j + c.length >= text.size()) break;
      const CodePoint after = Decode(text, j + c.length);
      if (Classify(after.value) != CharClass::kWord) break;
      if (c.value == ',' &&
          !(IsAsciiDigit(text[j - 1]) && IsAsciiDigit(text[j + 1]))) {
        break;
      }
      j += c.length + after.length;
    }
    std::string_view word = text.substr(i, j - i);
    // Possessive clitic becomes its own non-word token.
    size_t clitic = 0;
    if (word.size() > 2 && EndsWith(word, "'s")) clitic = 2;
    if (word.size() > 4 && EndsWith(word, "’s")) clitic = 4;
    if (clitic > 0) {
      const size_t stem_len = word.size() - clitic;
      tokens.push_back(MakeToken(word.substr(0, stem_len), offset + i,
                                 /*is_word=*/true, lexicon));
      tokens.push_back(MakeToken(word.substr(stem_len), offset + i + stem_len,
                                 /*is_word=*/false, lexicon));
    } else {
      tokens.push_back(MakeToken(word, offset + i, /*is_word=*/true, lexicon));
    }
    i = j;
  }
  return tokens;
}

size_t CountWords(std::string_view text) {
  size_t words = 0;
  bool in_word = false;
  for (size_t i = 0; i < text.size();) {
    const CodePoint cp = Decode(text, i);
    const CharClass cls = Classify(cp.value);
    if (cls == CharClass::kWord) {
      if (!in_word) ++words;
      in_word = true;
    } else if (in_word && IsJoiner(cp.value) && i + cp.length < text.size() &&
               Classify(Decode(text, i + cp.length).value) == CharClass::kWord &&
               !(cp.value == ',' && !(IsAsciiDigit(text[i - 1]) &&
                                      IsAsciiDigit(text[i + 1])))) {
      // Joined into the current word.
    } else {
      in_word = false;
    }
    i += cp.length;
  }
  return words;
}

Document Segment(std::string_view text, const Lexicon& lexicon) {
  Document doc;
  doc.text = std::string(text);
  const std::string_view body(doc.text);
  auto add_sentence = [&](Range r) {
    r = Trim(body, r);
    if (r.begin >= r.end) return;
    Sentence s;
    s.index = doc.sentences.size();
    s.span = {r.begin, r.end};
    s.tokens = Tokenize(body.substr(r.begin, r.end - r.begin), r.begin, lexicon);
    doc.sentences.push_back(std::move(s));
  };
  for (const Range& para : Paragraphs(body)) {
    const size_t first = doc.sentences.size();
    size_t start = para.begin;
    size_t i = para.begin;
    while (i < para.end) {
      const char c = body[i];
      if (c == '.' || c == '!' || c == '?') {
        const size_t end = BoundaryAfter(body, i, para.end, lexicon);
        if (end != std::string_view::npos) {
          add_sentence({start, end});
          start = end;
          i = end;
          continue;
        }
        while (i < para.end &&
               (body[i] == '.' || body[i] == '!' || body[i] == '?')) {
          ++i;
        }
        continue;
      }
      ++i;
    }
    add_sentence({start, para.end});
    if (doc.sentences.size() > first) doc.paragraph_starts.insert(first);
  }
  return doc;
}

namespace {

// Occurrences of `phrases` in the word sequence `words`.
int CountPhraseHits(const std::vector<std::string>& words,
                    const std::vector<std::vector<std::string>>& phrases) {
  int hits = 0;
  for (const auto& phrase : phrases) {
    if (phrase.empty() || phrase.size() > words.size()) continue;
    for (size_t i = 0; i + phrase.size() <= words.size(); ++i) {
      if (std::equal(phrase.begin(), phrase.end(), words.begin() + i)) ++hits;
    }
  }
  return hits;
}

}  // namespace

Document AnnotateMarkedness(Document doc, const Lexicon& lexicon) {
  const size_t n = doc.sentences.size();
  std::set<std::string> title_lemmas;
  if (doc.title) {
    for (const auto& lemma : ContentLemmas(*doc.title, lexicon)) {
      title_lemmas.insert(lemma);
    }
  }
  const double last = static_cast<double>(std::max<size_t>(1, n == 0 ? 0 : n - 1));
  for (Sentence& s : doc.sentences) {
    Markedness& m = s.markedness;
    if (doc.paragraph_starts.count(s.index) > 0 || s.index + 1 == n) {
      m.location_score = 1.0;
    } else {
      m.location_score = 0.5 * (1.0 - static_cast<double>(s.index) / last);
    }
    std::vector<std::string> words;
    bool overlap = false;
    for (const Token& t : s.tokens) {
      if (!t.is_word) continue;
      words.push_back(AsciiLower(t.surface));
      if (t.is_content && title_lemmas.count(t.lemma) > 0) overlap = true;
    }
    const int net = CountPhraseHits(words, lexicon.cue_bonus) -
                    CountPhraseHits(words, lexicon.cue_stigma);
    m.cue_score = std::clamp(static_cast<double>(net), -1.0, 1.0);
    m.in_title_overlap = overlap;
  }
  return doc;
}

Document ParseDocument(std::string id, std::string_view raw,
                       const Lexicon& lexicon) {
  constexpr std::string_view kTitlePrefix = "#TITLE ";
  std::optional<std::string> title;
  std::string_view body = raw;
  if (raw.substr(0, kTitlePrefix.size()) == kTitlePrefix) {
    size_t eol = raw.find('\n');
    if (eol == std::string_view::npos) eol = raw.size();
    std::string_view line = raw.substr(kTitlePrefix.size(), eol - kTitlePrefix.size());
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    title = std::string(line);
    body = eol < raw.size() ? raw.substr(eol + 1) : std::string_view();
  }
  Document doc = Segment(body, lexicon);
  doc.id = std::move(id);
  doc.title = std::move(title);
  return AnnotateMarkedness(std::move(doc), lexicon);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Document LoadDocument(const std::filesystem::path& path,
                      const Lexicon& lexicon) {
  return ParseDocument(path.stem().string(), ReadFile(path), lexicon);
}

std::vector<std::string> ContentLemmas(std::string_view text,
                                       const Lexicon& lexicon) {
  std::vector<std::string> lemmas;
  for (const Token& t : Tokenize(text, 0, lexicon)) {
    if (t.is_content &&
        std::find(lemmas.begin(), lemmas.end(), t.lemma) == lemmas.end()) {
      lemmas.push_back(t.lemma);
    }
  }
  return lemmas;
}

}  // namespace cohesia
