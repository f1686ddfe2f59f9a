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

#ifndef COHESIA_FACTORS_H_
#define COHESIA_FACTORS_H_

// Context factors: a declarative description of the input, purpose and
// output of a summary, and its resolution to engine parameters. Only
// single-source, covering, indicative summaries for non-substitute uses are
// supported; every other combination is refused rather than approximated.
//
// Profile files are flat key=value text, one per line, '#' comments:
//
//   input.structure=flat          flat | headed_source
//   input.scale=1200              positive token count
//   input.medium=en               language tag
//   input.genre=news              free tag
//   input.subject=ordinary        ordinary | specialised | restricted
//   input.unit=single             single | multiple
//   purpose.situation=floating    tied | floating
//   purpose.audience=untargetted  untargetted | targetted
//   purpose.use=previewing        retrieving | previewing | substitute |
//                                 refreshing | prompt
//   output.material=covering      covering | partial
//   output.format=running         running | headed
//   output.style=indicative       informative | indicative | critical |
//                                 aggregative

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "cohesia/cohesion.h"
#include "cohesia/select.h"
#include "cohesia/synthesize.h"

namespace cohesia {

enum class SourceStructure { kFlat, kHeadedSource };
enum class SubjectType { kOrdinary, kSpecialised, kRestricted };
enum class SourceUnit { kSingle, kMultiple };
enum class Situation { kTied, kFloating };
enum class Audience { kUntargetted, kTargetted };
enum class SummaryUse { kRetrieving, kPreviewing, kSubstitute, kRefreshing, kPrompt };
enum class Material { kCovering, kPartial };
enum class SummaryStyle { kInformative, kIndicative, kCritical, kAggregative };

struct InputFactors {
  SourceStructure structure = SourceStructure::kFlat;
  std::optional<int64_t> scale;  // Token count, > 0 when present.
  std::string medium = "en";
  std::string genre = "general";
  SubjectType subject = SubjectType::kOrdinary;
  SourceUnit unit = SourceUnit::kSingle;

  bool operator==(const InputFactors&) const = default;
};

struct PurposeFactors {
  Situation situation = Situation::kFloating;
  Audience audience = Audience::kUntargetted;
  SummaryUse use = SummaryUse::kPreviewing;

  bool operator==(const PurposeFactors&) const = default;
};

struct OutputFactors {
  Material material = Material::kCovering;
  SummaryFormat format = SummaryFormat::kRunning;
  SummaryStyle style = SummaryStyle::kIndicative;

  bool operator==(const OutputFactors&) const = default;
};

struct FactorProfile {
  InputFactors input;
  PurposeFactors purpose;
  OutputFactors output;

  bool operator==(const FactorProfile&) const = default;
};

enum class ProjectionMode { kPredications, kSentences, kKeyterms };

// "predications", "sentences" or "keyterms".
ProjectionMode ParseProjectionMode(std::string_view name);
std::string_view ProjectionModeName(ProjectionMode mode);

struct EngineParams {
  double compression_ratio = 0.10;  // (0, 0.5]
  EdgeWeights edge_weights;
  ScoreWeights score_weights;
  SummaryFormat output_format = SummaryFormat::kRunning;
  ProjectionMode projection_mode = ProjectionMode::kPredications;

  // Throws InvalidArgumentError on out-of-range values.
  void Validate() const;
};

constexpr double kMaxCompressionRatio = 0.5;

// Missing keys keep their defaults. Throws ParseError on unknown keys,
// unknown enum values (naming field and value), bad lines and repeated keys.
FactorProfile ParseProfile(std::istream& in);
FactorProfile ParseProfile(std::string_view text);

// Every key, in the order listed above; ParseProfile reads it back exactly.
std::string SerializeProfile(const FactorProfile& profile);

// Maps purpose.use to a compression ratio and projection (retrieving and
// prompt: 0.05 with key terms; previewing and refreshing: 0.10 with
// predications) and copies output.format. Throws UnsupportedFactorError for
// input.unit=multiple, output.material=partial, any output.style other than
// indicative, and purpose.use=substitute.
EngineParams Resolve(const FactorProfile& profile);

}  // namespace cohesia

#endif  // COHESIA_FACTORS_H_
