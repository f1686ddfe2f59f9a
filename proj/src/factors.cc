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

#include "cohesia/factors.h"

#include <array>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "cohesia/error.h"

namespace cohesia {
namespace {

template <typename E, size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<SourceStructure, 2> kStructures = {{
    {SourceStructure::kFlat, "flat"},
    {SourceStructure::kHeadedSource, "headed_source"},
}};
constexpr NameTable<SubjectType, 3> kSubjects = {{
    {SubjectType::kOrdinary, "ordinary"},
    {SubjectType::kSpecialised, "specialised"},
    {SubjectType::kRestricted, "restricted"},
}};
constexpr NameTable<SourceUnit, 2> kUnits = {{
    {SourceUnit::kSingle, "single"},
    {SourceUnit::kMultiple, "multiple"},
}};
constexpr NameTable<Situation, 2> kSituations = {{
    {Situation::kTied, "tied"},
    {Situation::kFloating, "floating"},
}};
constexpr NameTable<Audience, 2> kAudiences = {{
    {Audience::kUntargetted, "untargetted"},
    {Audience::kTargetted, "targetted"},
}};
constexpr NameTable<SummaryUse, 5> kUses = {{
    {SummaryUse::kRetrieving, "retrieving"},
    {SummaryUse::kPreviewing, "previewing"},
    {SummaryUse::kSubstitute, "substitute"},
    {SummaryUse::kRefreshing, "refreshing"},
    {SummaryUse::kPrompt, "prompt"},
}};
constexpr NameTable<Material, 2> kMaterials = {{
    {Material::kCovering, "covering"},
    {Material::kPartial, "partial"},
}};
constexpr NameTable<SummaryFormat, 2> kFormats = {{
    {SummaryFormat::kRunning, "running"},
    {SummaryFormat::kHeaded, "headed"},
}};
constexpr NameTable<SummaryStyle, 4> kStyles = {{
    {SummaryStyle::kInformative, "informative"},
    {SummaryStyle::kIndicative, "indicative"},
    {SummaryStyle::kCritical, "critical"},
    {SummaryStyle::kAggregative, "aggregative"},
}};
constexpr NameTable<ProjectionMode, 3> kProjections = {{
    {ProjectionMode::kPredications, "predications"},
    {ProjectionMode::kSentences, "sentences"},
    {ProjectionMode::kKeyterms, "keyterms"},
}};

template <typename E, size_t N>
std::string_view NameOf(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "";
}

template <typename E, size_t N>
std::optional<E> ValueOf(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

template <typename E, size_t N>
void SetEnum(const NameTable<E, N>& table, std::string_view key,
             std::string_view value, int line, E& field) {
  if (auto parsed = ValueOf(table, value)) {
    field = *parsed;
    return;
  }
  std::string expected;
  for (const auto& [e, n] : table) {
    expected += (expected.empty() ? "" : ", ") + std::string(n);
  }
  throw ParseError("unknown value \"" + std::string(value) + "\" for " +
                       std::string(key) + " (expected one of: " + expected + ")",
                   line);
}

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

void SetTag(std::string_view key, std::string_view value, int line,
            std::string& field) {
  if (value.empty() || value.find_first_of(" \t") != std::string_view::npos) {
    throw ParseError(std::string(key) + " must be a single non-empty tag", line);
  }
  field = std::string(value);
}

void SetField(FactorProfile& p, std::string_view key, std::string_view value,
              int line) {
  if (key == "input.structure") return SetEnum(kStructures, key, value, line, p.input.structure);
  if (key == "input.subject") return SetEnum(kSubjects, key, value, line, p.input.subject);
  if (key == "input.unit") return SetEnum(kUnits, key, value, line, p.input.unit);
  if (key == "input.medium") return SetTag(key, value, line, p.input.medium);
  if (key == "input.genre") return SetTag(key, value, line, p.input.genre);
  if (key == "input.scale") {
    int64_t scale = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), scale);
    if (ec != std::errc() || ptr != value.data() + value.size() || scale <= 0) {
      throw ParseError("input.scale must be a positive integer, got \"" +
                           std::string(value) + "\"",
                       line);
    }
    p.input.scale = scale;
    return;
  }
  if (key == "purpose.situation") return SetEnum(kSituations, key, value, line, p.purpose.situation);
  if (key == "purpose.audience") return SetEnum(kAudiences, key, value, line, p.purpose.audience);
  if (key == "purpose.use") return SetEnum(kUses, key, value, line, p.purpose.use);
  if (key == "output.material") return SetEnum(kMaterials, key, value, line, p.output.material);
  if (key == "output.format") return SetEnum(kFormats, key, value, line, p.output.format);
  if (key == "output.style") return SetEnum(kStyles, key, value, line, p.output.style);
  throw ParseError("unknown profile key \"" + std::string(key) + "\"", line);
}

}  // namespace

ProjectionMode ParseProjectionMode(std::string_view name) {
  if (auto mode = ValueOf(kProjections, name)) return *mode;
  throw InvalidArgumentError("unknown projection \"" + std::string(name) +
                             "\" (expected predications, sentences or keyterms)");
}

std::string_view ProjectionModeName(ProjectionMode mode) {
  return NameOf(kProjections, mode);
}

void EngineParams::Validate() const {
  if (!(compression_ratio > 0) || compression_ratio > kMaxCompressionRatio) {
    throw InvalidArgumentError("compression ratio must lie in (0, 0.5]");
  }
  edge_weights.Validate();
  score_weights.Validate();
}

FactorProfile ParseProfile(std::istream& in) {
  FactorProfile profile;
  std::set<std::string, std::less<>> seen;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view content = Trim(text);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value, got \"" + std::string(content) + "\"", line);
    }
    const std::string_view key = Trim(content.substr(0, eq));
    const std::string_view value = Trim(content.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw ParseError("repeated key \"" + std::string(key) + "\"", line);
    }
    SetField(profile, key, value, line);
  }
  return profile;
}

FactorProfile ParseProfile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseProfile(in);
}

std::string SerializeProfile(const FactorProfile& p) {
  std::ostringstream out;
  out << "input.structure=" << NameOf(kStructures, p.input.structure) << '\n';
  if (p.input.scale) out << "input.scale=" << *p.input.scale << '\n';
  out << "input.medium=" << p.input.medium << '\n'
      << "input.genre=" << p.input.genre << '\n'
      << "input.subject=" << NameOf(kSubjects, p.input.subject) << '\n'
      << "input.unit=" << NameOf(kUnits, p.input.unit) << '\n'
      << "purpose.situation=" << NameOf(kSituations, p.purpose.situation) << '\n'
      << "purpose.audience=" << NameOf(kAudiences, p.purpose.audience) << '\n'
      << "purpose.use=" << NameOf(kUses, p.purpose.use) << '\n'
      << "output.material=" << NameOf(kMaterials, p.output.material) << '\n'
      << "output.format=" << NameOf(kFormats, p.output.format) << '\n'
      << "output.style=" << NameOf(kStyles, p.output.style) << '\n';
  return out.str();
}

EngineParams Resolve(const FactorProfile& profile) {
  if (profile.input.unit == SourceUnit::kMultiple) {
    throw UnsupportedFactorError(
        "input.unit", "multiple; only single-source summarising is supported");
  }
  if (profile.output.material == Material::kPartial) {
    throw UnsupportedFactorError(
        "output.material", "partial; summaries always cover the whole source");
  }
  if (profile.output.style != SummaryStyle::kIndicative) {
    throw UnsupportedFactorError(
        "output.style", std::string(NameOf(kStyles, profile.output.style)) +
                            "; only indicative summaries can be produced from "
                            "shallow predication graphs");
  }
  if (profile.purpose.use == SummaryUse::kSubstitute) {
    throw UnsupportedFactorError(
        "purpose.use", "substitute; an indicative summary cannot stand in for "
                       "the source");
  }
  EngineParams params;
  switch (profile.purpose.use) {
    case SummaryUse::kRetrieving:
    case SummaryUse::kPrompt:
      params.compression_ratio = 0.05;
      params.projection_mode = ProjectionMode::kKeyterms;
      break;
    case SummaryUse::kPreviewing:
    case SummaryUse::kRefreshing:
    case SummaryUse::kSubstitute:
      params.compression_ratio = 0.10;
      params.projection_mode = ProjectionMode::kPredications;
      break;
  }
  params.output_format = profile.output.format;
  return params;
}

}  // namespace cohesia
