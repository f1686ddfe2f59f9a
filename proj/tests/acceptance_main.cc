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

// Acceptance checks for the engine. Prints one PASS/FAIL line per criterion
// and exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohesia/baseline.h"
#include "cohesia/cli.h"
#include "cohesia/pipeline.h"
#include "oracles.h"
#include "test_util.h"

namespace cohesia::acceptance {
namespace {

namespace fs = std::filesystem;

// Pinned tolerances.
constexpr double kRuntimeBudgetSeconds = 5.0;
constexpr double kCompressionSlack = 1.2;
constexpr double kLuhnExpected = 16.0 / 5.0;
constexpr size_t kRedundancyBudget = 3;
constexpr size_t kEdgeOracleSets = 50;
constexpr size_t kRandomRatioGraphs = 100;
constexpr size_t kFamilyMaxNodes = 10;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const Lexicon& Lex() { return Lexicon::Default(); }

std::vector<std::string> FixtureArgs() {
  std::vector<std::string> paths;
  for (const auto& p : testing::FixturePaths()) paths.push_back(p.string());
  return paths;
}

int RunCli(const std::vector<std::string>& args, std::string* out, std::string* err = nullptr) {
  std::ostringstream o, e;
  const int code = cli::Run(args, o, e);
  if (out != nullptr) *out = o.str();
  if (err != nullptr) *err = e.str();
  return code;
}

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cohesia_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// 1. Two summarize runs over the fixture corpus are byte-identical.
Outcome Determinism() {
  Outcome r;
  const auto fixtures = FixtureArgs();
  if (fixtures.size() != 20) r.Fail("expected 20 fixtures, found " + std::to_string(fixtures.size()));
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> args = {"summarize"};
  args.insert(args.end(), fixtures.begin(), fixtures.end());
  std::string first, second;
  const int c1 = RunCli(args, &first);
  const int c2 = RunCli(args, &second);
  size_t identical = 0;
  for (const std::string& f : fixtures) {
    std::string a, b;
    RunCli({"summarize", f}, &a);
    RunCli({"summarize", f}, &b);
    if (a == b && !a.empty()) ++identical;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c1 != 0 || c2 != 0) r.Fail("summarize exited non-zero");
  if (first != second || first.empty()) r.Fail("corpus outputs differ");
  if (identical != fixtures.size()) r.Fail("per-document outputs differ");
  if (seconds >= kRuntimeBudgetSeconds) r.Fail("runtime " + std::to_string(seconds) + " s");
  if (r.pass) {
    r.detail = std::to_string(identical) + " documents identical, " +
               std::to_string(seconds) + " s";
  }
  return r;
}

// 2. build_graph agrees with the naive pairwise re-derivation.
Outcome EdgeOracle() {
  Outcome r;
  std::mt19937 rng(20260101);
  const std::vector<std::string> predicates = {"rise", "fall", "approve", "reject", "say", "meet"};
  const std::vector<std::string> heads = {"price", "cost", "budget", "board", "plan", "staff",
                                          "worker", "employee", "rate", "firm", "company"};
  const SynonymTable synonyms = SynonymTable::FromGroups(
      {{"price", "cost", "rate"}, {"staff", "worker", "employee"}, {"firm", "company"}});
  size_t edges_checked = 0;
  for (size_t set = 0; set < kEdgeOracleSets; ++set) {
    const size_t n = 5 + rng() % 36;  // 5..40
    std::vector<Predication> preds;
    size_t sentence = 0;
    for (size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) ++sentence;
      Predication p;
      p.id = static_cast<int>(i);
      p.sentence_index = sentence;
      if (rng() % 5 != 0) p.predicate = predicates[rng() % predicates.size()];
      const size_t arity = (p.predicate ? 0 : 1) + rng() % 3;
      for (size_t a = 0; a < arity; ++a) {
        Argument arg;
        arg.role = static_cast<int>(a);
        if (rng() % 10 == 0) {
          arg.surface = "it";  // unresolved pronoun
        } else {
          arg.head = heads[rng() % heads.size()];
          arg.surface = arg.head;
        }
        p.args.push_back(arg);
      }
      p.complete = p.ComputeComplete();
      preds.push_back(p);
    }
    std::shuffle(preds.begin(), preds.end(), rng);
    GraphOptions options;
    options.weights.w_pred = 0.25 + static_cast<double>(rng() % 8) * 0.25;
    options.weights.w_intra = 0.25 + static_cast<double>(rng() % 8) * 0.25;
    options.weights.w_inter = 0.1 + static_cast<double>(rng() % 9) * 0.1;
    options.weights.synonym_discount = 0.5 + static_cast<double>(rng() % 6) * 0.1;
    if (set % 2 == 1) options.synonyms = &synonyms;
    options.pred_cross_only = set % 5 == 4;
    const auto expected = testing::NaiveEdges(preds, options);
    const auto actual = BuildGraph(preds, options).edges();
    edges_checked += expected.size();
    if (expected != actual) r.Fail("set " + std::to_string(set) + " differs");
  }
  if (r.pass) {
    r.detail = std::to_string(kEdgeOracleSets) + " sets, " + std::to_string(edges_checked) +
               " edges identical in type and weight";
  }
  return r;
}

CohesionGraph UniformGraph(size_t n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Predication> nodes;
  for (size_t i = 0; i < n; ++i) {
    nodes.push_back(testing::Pred(static_cast<int>(i), "p", {"x"}, i));
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) {
    Edge e;
    e.a = a;
    e.b = b;
    e.types.Insert(EdgeType::kSimilarArgumentInter);
    e.weight = 1.0;
    edges.push_back(e);
  }
  return CohesionGraph(std::move(nodes), std::move(edges));
}

CohesionGraph DisjointCliques(const std::vector<size_t>& sizes) {
  std::vector<std::pair<int, int>> pairs;
  int base = 0;
  for (size_t s : sizes) {
    for (int a = 0; a < static_cast<int>(s); ++a) {
      for (int b = a + 1; b < static_cast<int>(s); ++b) pairs.emplace_back(base + a, base + b);
    }
    base += static_cast<int>(s);
  }
  return UniformGraph(static_cast<size_t>(base), pairs);
}

// 3. Greedy never beats the exhaustive optimum; equality on structured families.
Outcome GreedyVsExhaustive() {
  Outcome r;
  const ScoreWeights w;
  size_t fixture_graphs = 0;
  for (const auto& path : testing::FixturePaths()) {
    const CohesionGraph g = BuildGraph(Interpret(LoadDocument(path, Lex()), Lex()));
    if (g.size() > 10) continue;
    ++fixture_graphs;
    for (size_t k = 1; k <= g.size(); ++k) {
      const double greedy = GreedySelect(g, k, w).breakdown.total;
      const double best = ExhaustiveSelect(g, k, w).breakdown.total;
      if (greedy > best + kScoreTolerance) {
        r.Fail(path.filename().string() + " k=" + std::to_string(k) + " greedy above optimum");
      }
    }
  }
  if (fixture_graphs == 0) r.Fail("no fixture graph within 10 nodes");

  std::vector<std::pair<std::string, CohesionGraph>> families;
  for (size_t n = 2; n <= kFamilyMaxNodes; ++n) {
    std::vector<std::pair<int, int>> star, clique;
    for (int i = 1; i < static_cast<int>(n); ++i) star.emplace_back(0, i);
    for (int a = 0; a < static_cast<int>(n); ++a) {
      for (int b = a + 1; b < static_cast<int>(n); ++b) clique.emplace_back(a, b);
    }
    families.emplace_back("star" + std::to_string(n), UniformGraph(n, star));
    families.emplace_back("clique" + std::to_string(n), UniformGraph(n, clique));
  }
  for (const auto& sizes : std::vector<std::vector<size_t>>{
           {2, 2}, {3, 3}, {2, 3}, {4, 4}, {2, 2, 2}, {3, 3, 3}, {2, 4}, {5, 5}, {3, 4, 3}}) {
    std::string name = "cliques";
    for (size_t s : sizes) name += "-" + std::to_string(s);
    families.emplace_back(name, DisjointCliques(sizes));
  }
  for (const auto& [name, g] : families) {
    for (size_t k = 1; k <= g.size(); ++k) {
      const double greedy = GreedySelect(g, k, w).breakdown.total;
      const double best = ExhaustiveSelect(g, k, w).breakdown.total;
      if (std::abs(greedy - best) > kScoreTolerance) {
        r.Fail(name + " k=" + std::to_string(k) + " greedy " + std::to_string(greedy) +
               " < optimum " + std::to_string(best));
      }
    }
  }

  std::mt19937 rng(424242);
  double ratio_sum = 0.0, ratio_min = 1.0;
  size_t optimal_hits = 0;
  for (size_t t = 0; t < kRandomRatioGraphs; ++t) {
    const size_t n = 4 + rng() % 9;  // 4..12
    const double density = 0.15 + static_cast<double>(rng() % 60) / 100.0;
    std::vector<Predication> nodes;
    for (size_t i = 0; i < n; ++i) {
      nodes.push_back(testing::Pred(static_cast<int>(i), "p", {"x"}, rng() % n));
    }
    std::vector<Edge> edges;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a + 1; b < n; ++b) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) >= density) continue;
        Edge e;
        e.a = static_cast<int>(a);
        e.b = static_cast<int>(b);
        e.types.Insert(EdgeType::kSimilarArgumentInter);
        e.weight = 0.5 * static_cast<double>(1 + rng() % 4);
        edges.push_back(e);
      }
    }
    const CohesionGraph g(nodes, edges);
    const size_t k = 1 + rng() % std::min<size_t>(n, 5);
    const double greedy = GreedySelect(g, k, w).breakdown.total;
    const double best = ExhaustiveSelect(g, k, w).breakdown.total;
    if (greedy > best + kScoreTolerance) r.Fail("random graph " + std::to_string(t) + " above optimum");
    const double ratio = best > 0 ? greedy / best : 1.0;
    ratio_sum += ratio;
    ratio_min = std::min(ratio_min, ratio);
    if (std::abs(greedy - best) <= kScoreTolerance) ++optimal_hits;
  }
  std::ostringstream detail;
  detail << fixture_graphs << " fixture graphs, " << families.size()
         << " family graphs; random greedy/optimal ratio mean "
         << ratio_sum / kRandomRatioGraphs << " min " << ratio_min << " ("
         << optimal_hits << "/" << kRandomRatioGraphs << " optimal)";
  if (r.pass) {
    r.detail = detail.str();
  } else {
    r.detail += "; " + detail.str();
  }
  return r;
}

// 4. Uniformly scaling the edge weights changes neither selection nor text.
Outcome ScalingInvariance() {
  Outcome r;
  size_t checks = 0;
  for (const auto& path : testing::FixturePaths()) {
    const Document doc = LoadDocument(path, Lex());
    for (std::optional<size_t> k : {std::optional<size_t>{}, std::optional<size_t>{3}}) {
      EngineOptions base;
      base.budget_k = k;
      const SummaryResult ref = SummarizeDocument(doc, Lex(), base);
      for (double c : {0.5, 2.0, 10.0}) {
        EngineOptions scaled = base;
        scaled.params.edge_weights.w_pred *= c;
        scaled.params.edge_weights.w_intra *= c;
        scaled.params.edge_weights.w_inter *= c;
        const SummaryResult s = SummarizeDocument(doc, Lex(), scaled);
        const Selection direct =
            GreedySelect(ref.graph.Scaled(c), ref.selection.budget_k, base.params.score_weights);
        ++checks;
        if (s.selection.node_ids != ref.selection.node_ids ||
            direct.node_ids != ref.selection.node_ids) {
          r.Fail(path.filename().string() + " c=" + std::to_string(c) + " selection changed");
        }
        if (s.output.ToText() != ref.output.ToText()) {
          r.Fail(path.filename().string() + " c=" + std::to_string(c) + " summary changed");
        }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(checks) + " scaled runs unchanged";
  return r;
}

// Copies the predications of `sentence` into a new sentence right after it,
// shifting later sentences; ids are renumbered in reading order. `old_to_new`
// maps original ids.
std::vector<Predication> DuplicateSentence(const std::vector<Predication>& preds,
                                           size_t sentence, std::map<int, int>* old_to_new) {
  std::vector<Predication> out;
  std::vector<Predication> copies;
  for (const Predication& p : preds) {
    Predication q = p;
    if (q.sentence_index > sentence) ++q.sentence_index;
    (*old_to_new)[p.id] = static_cast<int>(out.size());
    q.id = static_cast<int>(out.size());
    out.push_back(q);
    if (p.sentence_index == sentence) copies.push_back(p);
    const bool last_of_sentence =
        p.sentence_index == sentence &&
        (&p == &preds.back() || (&p + 1)->sentence_index != sentence);
    if (last_of_sentence) {
      for (Predication c : copies) {
        c.sentence_index = sentence + 1;
        c.id = static_cast<int>(out.size());
        out.push_back(c);
      }
    }
  }
  return out;
}

// 5. Reiterating a sentence promotes its content and never lets a weaker
// node displace a selected one.
Outcome RedundancyPromotion() {
  Outcome r;
  const ScoreWeights w;
  size_t fixtures = 0, entered = 0;
  for (const auto& path : testing::FixturePaths()) {
    if (fixtures == 10) break;
    ++fixtures;
    const std::string name = path.stem().string();
    const auto preds = Interpret(LoadDocument(path, Lex()), Lex());
    const CohesionGraph before = BuildGraph(preds);
    const Selection sel_before = GreedySelect(before, kRedundancyBudget, w);
    // The sentence holding the strongest unselected node (by weighted degree,
    // then reading order): the most competitive content outside the selection.
    int chosen = -1;
    for (size_t i = 0; i < before.size(); ++i) {
      const int id = before.nodes()[i].id;
      if (std::binary_search(sel_before.node_ids.begin(), sel_before.node_ids.end(), id)) continue;
      if (chosen < 0 ||
          before.WeightedDegree(i) > before.WeightedDegree(before.IndexOf(chosen)) + kScoreTolerance) {
        chosen = id;
      }
    }
    if (chosen < 0) chosen = sel_before.node_ids.front();
    const size_t sentence = before.nodes()[before.IndexOf(chosen)].sentence_index;

    std::map<int, int> old_to_new;
    const auto dup = DuplicateSentence(preds, sentence, &old_to_new);
    const CohesionGraph after = BuildGraph(dup);
    const Selection sel_after = GreedySelect(after, kRedundancyBudget, w);

    bool promoted = false;
    for (int id : sel_after.node_ids) {
      const size_t s = after.nodes()[after.IndexOf(id)].sentence_index;
      if (s == sentence || s == sentence + 1) promoted = true;
    }
    bool was_in = false;
    for (int id : sel_before.node_ids) {
      was_in |= before.nodes()[before.IndexOf(id)].sentence_index == sentence;
    }
    if (promoted && !was_in) ++entered;
    if (!promoted) r.Fail(name + ": duplicated sentence " + std::to_string(sentence) + " not selected");

    std::vector<int> displaced, entrants;
    std::vector<int> mapped;
    for (int id : sel_before.node_ids) mapped.push_back(old_to_new.at(id));
    for (int id : mapped) {
      if (!std::binary_search(sel_after.node_ids.begin(), sel_after.node_ids.end(), id)) {
        displaced.push_back(id);
      }
    }
    std::sort(mapped.begin(), mapped.end());
    for (int id : sel_after.node_ids) {
      if (!std::binary_search(mapped.begin(), mapped.end(), id)) entrants.push_back(id);
    }
    for (int d : displaced) {
      for (int e : entrants) {
        if (after.WeightedDegree(after.IndexOf(e)) + kScoreTolerance <
            after.WeightedDegree(after.IndexOf(d))) {
          r.Fail(name + ": node " + std::to_string(d) + " displaced by weaker node " +
                 std::to_string(e));
        }
      }
    }
  }
  if (r.pass) {
    r.detail = std::to_string(fixtures) + " fixtures; duplicated content selected in all, newly entering in " +
               std::to_string(entered);
  }
  return r;
}

// 6. The designated Luhn sentence scores exactly 16/5 and ranks first.
Outcome LuhnFixture() {
  Outcome r;
  const Document doc = testing::Fixture("grain_harvest");
  const auto significant = SignificantLemmas(doc);
  const double score = LuhnSentenceScore(doc.sentences.at(0), significant);
  if (score != kLuhnExpected) r.Fail("score " + std::to_string(score));
  const auto top = LuhnExtract(doc, 1).indices;
  if (top != std::vector<size_t>{0}) r.Fail("sentence 0 not ranked first");
  if (r.pass) r.detail = "score " + FormatNumber(score) + ", ranked first at m=1";
  return r;
}

// 7. Interchange round trip and pipeline equivalence through the CLI.
Outcome RoundTrip() {
  Outcome r;
  for (const auto& path : testing::FixturePaths()) {
    const auto preds = Interpret(LoadDocument(path, Lex()), Lex());
    if (IngestPredications(ExportPredications(preds)) != preds) {
      r.Fail(path.filename().string() + " round trip differs");
    }
  }
  const fs::path dir = ScratchDir("roundtrip");
  const auto fixtures = FixtureArgs();
  std::vector<std::string> interpret = {"interpret", "--format", "jsonl", "--output-dir",
                                        dir.string()};
  interpret.insert(interpret.end(), fixtures.begin(), fixtures.end());
  if (RunCli(interpret, nullptr) != 0) r.Fail("interpret failed");
  std::vector<std::string> direct = {"summarize"};
  std::vector<std::string> ingested = {"summarize", "--from-predications"};
  direct.insert(direct.end(), fixtures.begin(), fixtures.end());
  for (const std::string& f : fixtures) {
    ingested.push_back((dir / (fs::path(f).stem().string() + ".jsonl")).string());
  }
  std::string a, b;
  const int ca = RunCli(direct, &a);
  const int cb = RunCli(ingested, &b);
  if (ca != 0 || cb != 0) r.Fail("summarize exited non-zero");
  if (a != b || a.empty()) r.Fail("--from-predications output differs from direct");
  fs::remove_all(dir);
  if (r.pass) r.detail = std::to_string(fixtures.size()) + " documents; outputs byte-identical";
  return r;
}

// 8. Profiles outside the supported lattice exit 2 naming the field.
Outcome FactorGating() {
  Outcome r;
  const fs::path dir = ScratchDir("gating");
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"output.style=informative", "output.style"}, {"output.style=critical", "output.style"},
      {"output.style=aggregative", "output.style"}, {"output.material=partial", "output.material"},
      {"input.unit=multiple", "input.unit"},       {"purpose.use=substitute", "purpose.use"}};
  const std::string fixture = (testing::FixtureDir() / "zoo_birth.txt").string();
  for (size_t i = 0; i < cases.size(); ++i) {
    const fs::path profile = dir / ("p" + std::to_string(i) + ".profile");
    std::ofstream(profile) << cases[i].first << "\n";
    std::string err;
    const int code = RunCli({"summarize", "--profile", profile.string(), fixture}, nullptr, &err);
    if (code != 2) r.Fail(cases[i].first + " exited " + std::to_string(code));
    if (err.find("unsupported " + cases[i].second) == std::string::npos) {
      r.Fail(cases[i].first + " message lacks field: " + err);
    }
  }
  fs::remove_all(dir);
  if (r.pass) r.detail = std::to_string(cases.size()) + " profiles rejected with exit 2";
  return r;
}

// 9. Output stays within 1.2x the selected predications' tokens, and the
// budget is max(1, round(0.10 |V|)).
Outcome CompressionBound() {
  Outcome r;
  double worst = 0.0;
  for (const auto& path : testing::FixturePaths()) {
    EngineOptions options;
    options.params.compression_ratio = 0.10;
    const SummaryResult s = SummarizeDocument(LoadDocument(path, Lex()), Lex(), options);
    size_t tokens = 0;
    for (int id : s.selection.node_ids) {
      tokens += PredicationTokenCount(s.graph.nodes()[s.graph.IndexOf(id)]);
    }
    const size_t words = s.output.WordCount();
    const auto expected_k = static_cast<size_t>(
        std::max<long long>(1, std::llround(0.10 * static_cast<double>(s.graph.size()))));
    if (static_cast<double>(words) > kCompressionSlack * static_cast<double>(tokens)) {
      r.Fail(path.filename().string() + ": " + std::to_string(words) + " words vs " +
             std::to_string(tokens) + " tokens");
    }
    if (s.selection.node_ids.size() != expected_k) {
      r.Fail(path.filename().string() + ": selected " +
             std::to_string(s.selection.node_ids.size()) + ", expected " +
             std::to_string(expected_k));
    }
    if (tokens > 0) worst = std::max(worst, static_cast<double>(words) / static_cast<double>(tokens));
  }
  if (r.pass) r.detail = "max words/tokens ratio " + FormatNumber(worst);
  return r;
}

// 10. Smoothing pulls in the antecedent sentence and is idempotent.
Outcome AnaphoraSmoothing() {
  Outcome r;
  const Document doc = testing::Fixture("council_levy");
  if (doc.SentenceText(4) != "It failed.") r.Fail("sentence 4 is not \"It failed.\"");
  SentenceSelection sel;
  sel.indices = {4};
  const SentenceSelection once = Smooth(sel, doc);
  if (once.indices != std::vector<size_t>{3, 4}) r.Fail("{4} did not smooth to {3,4}");
  if (Smooth(once, doc).indices != once.indices) r.Fail("smoothing not idempotent");
  for (const auto& path : testing::FixturePaths()) {
    const Document d = LoadDocument(path, Lex());
    for (size_t m = 1; m <= 3; ++m) {
      const auto s = Smooth(LuhnExtract(d, m), d);
      if (Smooth(s, d).indices != s.indices) r.Fail(path.filename().string() + " not idempotent");
    }
  }
  if (r.pass) r.detail = "{4} -> {3,4}; idempotent on all fixtures";
  return r;
}

}  // namespace
}  // namespace cohesia::acceptance

int main() {
  using namespace cohesia::acceptance;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"determinism", Determinism},
      {"edge oracle", EdgeOracle},
      {"greedy vs exhaustive", GreedyVsExhaustive},
      {"scaling invariance", ScalingInvariance},
      {"redundancy promotion", RedundancyPromotion},
      {"luhn fixture", LuhnFixture},
      {"round trip", RoundTrip},
      {"factor gating", FactorGating},
      {"compression bound", CompressionBound},
      {"anaphora smoothing", AnaphoraSmoothing},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
