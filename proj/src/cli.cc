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

#include "cohesia/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cohesia/baseline.h"
#include "cohesia/error.h"
#include "cohesia/factors.h"
#include "cohesia/pipeline.h"

namespace cohesia::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> inputs;
  std::string data_dir;
  std::string stopwords;
  std::string pronouns;
  std::string synonyms;
  std::string profile;
  std::string output_dir;
  std::optional<double> ratio;
  std::optional<size_t> k;
  std::optional<size_t> m;
  std::optional<double> alpha, beta, gamma, delta;
  std::optional<double> w_pred, w_intra, w_inter, synonym_discount;
  std::optional<std::string> format;
  std::optional<std::string> projection;
  std::string graph_format = "json";
  std::string interpret_format = "jsonl";
  std::string method = "luhn";
  std::string baseline = "lead";
  bool pred_cross_only = false;
  bool explain = false;
  bool from_predications = false;
  bool smooth = false;
  int jobs = 1;
};

// Output of one document: file suffix -> contents, in write order.
struct DocOutput {
  std::string id;
  std::vector<std::pair<std::string, std::string>> parts;
  std::optional<std::string> error;
};

struct Context {
  const Options& opts;
  EngineOptions engine;
  const Lexicon* lexicon = nullptr;
};

void AddInputs(CLI::App* cmd, Options& o) {
  cmd->add_option("inputs", o.inputs, "Input files")->required();
  cmd->add_option("--data", o.data_dir, "Lexicon directory (default $COHESIA_DATA)");
  cmd->add_option("--stopwords", o.stopwords, "Stopword list replacing the shipped one");
  cmd->add_option("--pronouns", o.pronouns, "Pronoun list replacing the shipped one");
  cmd->add_option("--output-dir", o.output_dir, "Write one file per document here");
  cmd->add_option("--jobs", o.jobs, "Documents processed in parallel")->check(CLI::PositiveNumber);
}

void AddGraphOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--profile", o.profile, "Context-factor profile (key=value)");
  cmd->add_option("--w-pred", o.w_pred, "Weight of common-predicate links");
  cmd->add_option("--w-intra", o.w_intra, "Weight of shared-argument links within a sentence");
  cmd->add_option("--w-inter", o.w_inter, "Weight of similar-argument links across sentences");
  cmd->add_option("--synonym-discount", o.synonym_discount, "Factor on synonym-based links");
  cmd->add_option("--synonyms", o.synonyms, "Synonym group file");
  cmd->add_flag("--pred-cross-only", o.pred_cross_only,
                "Link equal predicates only across sentences");
}

void AddEngineOptions(CLI::App* cmd, Options& o) {
  AddGraphOptions(cmd, o);
  cmd->add_option("--ratio", o.ratio, "Compression ratio over graph nodes");
  cmd->add_option("--k", o.k, "Explicit node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", o.alpha, "Centrality weight");
  cmd->add_option("--beta", o.beta, "Representativeness weight");
  cmd->add_option("--gamma", o.gamma, "Coherence weight");
  cmd->add_option("--delta", o.delta, "Markedness prior weight");
  cmd->add_option("--format", o.format, "running | headed");
}

std::string Slurp(const fs::path& path) { return ReadFile(path); }

// Params from the profile (or defaults) with command-line overrides on top.
EngineOptions BuildEngine(const Options& o, FactorProfile profile) {
  EngineOptions engine;
  engine.params = Resolve(profile);
  EngineParams& p = engine.params;
  if (o.ratio) p.compression_ratio = *o.ratio;
  if (o.alpha) p.score_weights.alpha = *o.alpha;
  if (o.beta) p.score_weights.beta = *o.beta;
  if (o.gamma) p.score_weights.gamma = *o.gamma;
  if (o.delta) p.score_weights.delta = *o.delta;
  if (o.w_pred) p.edge_weights.w_pred = *o.w_pred;
  if (o.w_intra) p.edge_weights.w_intra = *o.w_intra;
  if (o.w_inter) p.edge_weights.w_inter = *o.w_inter;
  if (o.synonym_discount) p.edge_weights.synonym_discount = *o.synonym_discount;
  if (o.format) p.output_format = ParseSummaryFormat(*o.format);
  if (o.projection) p.projection_mode = ParseProjectionMode(*o.projection);
  p.Validate();
  engine.budget_k = o.k;
  engine.pred_cross_only = o.pred_cross_only;
  return engine;
}

std::vector<Predication> LoadPredications(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return IngestPredications(in);
}

std::string SentenceList(const SentenceSelection& sel, const Document& doc) {
  std::string out;
  for (size_t i : sel.indices) {
    out += std::to_string(i) + "\t" + std::string(doc.SentenceText(i)) + "\n";
  }
  return out;
}

DocOutput ProcessOne(const std::string& command, const fs::path& path,
                     const Context& ctx) {
  const Options& o = ctx.opts;
  DocOutput result;
  result.id = path.stem().string();
  if (o.from_predications) {
    std::vector<Predication> preds = LoadPredications(path);
    if (command == "graph") {
      CohesionGraph g = BuildGraph(std::move(preds), ctx.engine.graph_options());
      const GraphFormat fmt = ParseGraphFormat(o.graph_format);
      result.parts.emplace_back(fmt == GraphFormat::kDot ? ".dot" : ".json",
                                ExportGraph(g, fmt));
      return result;
    }
    SummaryResult r = SummarizePredications(result.id, std::move(preds), ctx.engine);
    result.parts.emplace_back(
        ".summary.txt",
        RenderProjection(r, nullptr, ctx.engine.params.projection_mode, o.m));
    if (o.explain) result.parts.emplace_back(".explain.json", ExplainJson(r, ctx.engine) + "\n");
    return result;
  }

  const Document doc = LoadDocument(path, *ctx.lexicon);
  if (command == "interpret") {
    result.parts.emplace_back(".jsonl", ExportPredications(Interpret(doc, *ctx.lexicon)));
  } else if (command == "graph") {
    std::vector<Predication> preds = Interpret(doc, *ctx.lexicon);
    CohesionGraph g = BuildGraph(std::move(preds), ctx.engine.graph_options());
    const GraphFormat fmt = ParseGraphFormat(o.graph_format);
    result.parts.emplace_back(fmt == GraphFormat::kDot ? ".dot" : ".json",
                              ExportGraph(g, fmt));
  } else if (command == "summarize") {
    SummaryResult r = SummarizeDocument(doc, *ctx.lexicon, ctx.engine);
    result.parts.emplace_back(
        ".summary.txt",
        RenderProjection(r, &doc, ctx.engine.params.projection_mode, o.m));
    if (o.explain) result.parts.emplace_back(".explain.json", ExplainJson(r, ctx.engine) + "\n");
  } else if (command == "baseline") {
    SentenceSelection sel = Extract(ParseExtractionMethod(o.method), doc, o.m.value_or(3));
    if (o.smooth) sel = Smooth(std::move(sel), doc);
    result.parts.emplace_back(".baseline.txt", SentenceList(sel, doc));
  } else {  // evaluate, compare
    SummaryResult r = SummarizeDocument(doc, *ctx.lexicon, ctx.engine);
    const ExtractionMethod method = ParseExtractionMethod(o.baseline);
    std::vector<size_t> engine_sents;
    size_t baseline_m = 0;
    if (command == "compare") {
      baseline_m = o.m.value_or(3);
      engine_sents = ProjectToSentences(r.selection, r.graph, baseline_m);
    } else {
      engine_sents = SelectedSentences(r);
      baseline_m = engine_sents.size();
    }
    const SentenceSelection base = Extract(method, doc, baseline_m);
    const EvalReport report = Evaluate(r.output, doc, engine_sents, base.indices,
                                       ComputeLinkageStats(r.graph), *ctx.lexicon);
    result.parts.emplace_back(".eval.json", EvalReportJson(report) + "\n");
  }
  return result;
}

DocOutput ProcessGuarded(const std::string& command, const fs::path& path,
                         const Context& ctx) {
  try {
    return ProcessOne(command, path, ctx);
  } catch (const Error& e) {
    DocOutput failed;
    failed.id = path.stem().string();
    failed.error = path.string() + ": " + e.what();
    return failed;
  }
}

std::vector<DocOutput> ProcessCorpus(const std::string& command, const Context& ctx) {
  const auto& inputs = ctx.opts.inputs;
  std::vector<DocOutput> outputs(inputs.size());
  const size_t wave = static_cast<size_t>(std::max(1, ctx.opts.jobs));
  for (size_t start = 0; start < inputs.size(); start += wave) {
    const size_t end = std::min(inputs.size(), start + wave);
    if (end - start == 1) {
      outputs[start] = ProcessGuarded(command, inputs[start], ctx);
      continue;
    }
    std::vector<std::future<DocOutput>> futures;
    for (size_t i = start; i < end; ++i) {
      futures.push_back(std::async(std::launch::async, ProcessGuarded,
                                   std::cref(command), fs::path(inputs[i]),
                                   std::cref(ctx)));
    }
    for (size_t i = start; i < end; ++i) outputs[i] = futures[i - start].get();
  }
  return outputs;
}

Lexicon LoadLexicon(const Options& o) {
  Lexicon lexicon = Lexicon::Load(o.data_dir.empty() ? Lexicon::DefaultDataDir()
                                                     : fs::path(o.data_dir));
  if (!o.stopwords.empty()) lexicon.stopwords = ReadWordList(o.stopwords);
  if (!o.pronouns.empty()) lexicon.pronouns = ReadWordList(o.pronouns);
  return lexicon;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Indicative summarisation over cohesion graphs of predications",
               "cohesia"};
  app.require_subcommand(1, 1);

  CLI::App* summarize = app.add_subcommand("summarize", "Summarise documents");
  AddInputs(summarize, o);
  AddEngineOptions(summarize, o);
  summarize->add_option("--projection", o.projection, "predications | sentences | keyterms");
  summarize->add_option("--m", o.m, "Sentence count for the sentences projection");
  summarize->add_flag("--explain", o.explain, "Emit the score breakdown as JSON");
  summarize->add_flag("--from-predications", o.from_predications,
                      "Inputs are predication interchange files");

  CLI::App* interpret = app.add_subcommand("interpret", "Extract predications");
  AddInputs(interpret, o);
  interpret->add_option("--format", o.interpret_format, "Output format")
      ->check(CLI::IsMember({"jsonl"}));

  CLI::App* graph = app.add_subcommand("graph", "Export the cohesion graph");
  AddInputs(graph, o);
  AddGraphOptions(graph, o);
  graph->add_option("--out", o.graph_format, "json | dot");
  graph->add_flag("--from-predications", o.from_predications,
                  "Inputs are predication interchange files");

  CLI::App* baseline = app.add_subcommand("baseline", "Run a text-extraction baseline");
  AddInputs(baseline, o);
  baseline->add_option("--method", o.method, "luhn | lead | cue");
  baseline->add_option("--m", o.m, "Sentences to select (default 3)");
  baseline->add_flag("--smooth", o.smooth, "Add predecessors of anaphor-initial sentences");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Report metrics for engine summaries");
  AddInputs(evaluate, o);
  AddEngineOptions(evaluate, o);
  evaluate->add_option("--baseline", o.baseline, "luhn | lead | cue");

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare engine sentence projection with a baseline at equal m");
  AddInputs(compare, o);
  AddEngineOptions(compare, o);
  compare->add_option("--baseline", o.baseline, "luhn | lead | cue");
  compare->add_option("--m", o.m, "Sentences on each side (default 3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  for (const std::string& input : o.inputs) {
    if (!fs::is_regular_file(input)) {
      err << "error: no such input file: " << input << "\n";
      return kExitUsage;
    }
  }
  for (const std::string* path : {&o.profile, &o.synonyms, &o.stopwords, &o.pronouns}) {
    if (!path->empty() && !fs::is_regular_file(*path)) {
      err << "error: no such file: " << *path << "\n";
      return kExitUsage;
    }
  }

  FactorProfile profile;
  if (!o.profile.empty()) {
    try {
      profile = ParseProfile(Slurp(o.profile));
    } catch (const Error& e) {
      err << "error: " << o.profile << ": " << e.what() << "\n";
      return kExitInputFailure;
    }
  }
  std::optional<Context> ctx;
  try {
    ctx.emplace(Context{o, BuildEngine(o, profile)});
  } catch (const UnsupportedFactorError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupportedProfile;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<SynonymTable> synonyms;
  std::optional<Lexicon> lexicon;
  try {
    if (!o.synonyms.empty()) {
      synonyms = SynonymTable::Load(o.synonyms);
      ctx->engine.synonyms = &*synonyms;
    }
    if (!o.from_predications) {
      lexicon = LoadLexicon(o);
      ctx->lexicon = &*lexicon;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputFailure;
  }
  if (command == "graph") {
    try {
      ParseGraphFormat(o.graph_format);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (command == "baseline" || command == "evaluate" || command == "compare") {
    try {
      ParseExtractionMethod(command == "baseline" ? o.method : o.baseline);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const std::vector<DocOutput> outputs = ProcessCorpus(command, *ctx);
  bool failed = false;
  const bool corpus = outputs.size() > 1;
  for (const DocOutput& doc : outputs) {
    if (doc.error) {
      err << "error: " << *doc.error << "\n";
      failed = true;
      continue;
    }
    if (!o.output_dir.empty()) {
      fs::create_directories(o.output_dir);
      for (const auto& [suffix, text] : doc.parts) {
        std::ofstream file(fs::path(o.output_dir) / (doc.id + suffix), std::ios::binary);
        file << text;
        if (!file) {
          err << "error: cannot write " << doc.id << suffix << "\n";
          failed = true;
        }
      }
      continue;
    }
    if (corpus) out << "### " << doc.id << "\n";
    for (const auto& [suffix, text] : doc.parts) out << text;
  }
  return failed ? kExitInputFailure : kExitOk;
}

}  // namespace cohesia::cli
