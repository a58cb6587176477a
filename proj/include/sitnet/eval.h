// Copyright 2026 The Sitnet Authors.
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

#ifndef SITNET_EVAL_H_
#define SITNET_EVAL_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sitnet/bln.h"
#include "sitnet/disambiguation.h"
#include "sitnet/edges.h"

namespace sitnet {

struct TripleKey {
  std::string seed;
  Relation relation = Relation::kIsA;
  std::string target;

  auto operator<=>(const TripleKey&) const = default;
};

std::string FormatTriple(const TripleKey& key);

using ScenarioResults = std::map<TripleKey, double>;

enum class InferenceMethod { kExact, kLikelihoodWeighting, kGibbs };

std::optional<InferenceMethod> ParseMethod(std::string_view name);
std::string_view MethodName(InferenceMethod method);

struct InferenceParams {
  InferenceMethod method = InferenceMethod::kLikelihoodWeighting;
  size_t n_samples = 20000;
  size_t burn_in = 2000;
  uint64_t seed = 1;
};

// "Object_1", "Object_2", ...; seed i of a scenario is bound to object i.
std::string ScenarioObject(size_t index);
std::vector<std::string> ScenarioObjects(size_t count);

// For each seed, clamps IsA(Object_i, seed) to true (and every auxiliary
// constraint variable to true) and queries every variable of Object_i.
ScenarioResults RunScenario(const GroundNetwork& net, const std::vector<std::string>& seeds,
                            const InferenceParams& params);

struct GoldStandard {
  std::map<TripleKey, bool> relation_labels;
  std::map<std::string, SynsetId> sense_labels;

  // `REL<TAB>seed<TAB>relation<TAB>target<TAB>0|1` and
  // `SENSE<TAB>seed<TAB>synset_id` lines.
  static GoldStandard Read(std::istream& in);
  void Write(std::ostream& out) const;
  // Throws ConfigError if a label names a seed outside `seeds`.
  void Validate(const std::vector<std::string>& seeds) const;
};

struct AccuracyCell {
  size_t correct = 0;
  size_t total = 0;
  double Percent() const { return total == 0 ? 0.0 : 100.0 * correct / total; }
};

struct AccuracyReport {
  std::map<Relation, AccuracyCell> per_relation;  // only cells with labels
  std::optional<AccuracyCell> wsd;
};

// A prediction is true iff its probability is strictly above 0.5.
AccuracyReport Score(const ScenarioResults& results, const GoldStandard& gold,
                     const SenseAssignment* assignment = nullptr);

using NamedReport = std::pair<std::string, AccuracyReport>;

// Aligned table: one row per scenario, one column per relation plus WSD.
void WriteReportTable(std::ostream& out, const std::vector<NamedReport>& reports);
// `scenario<TAB>relation<TAB>accuracy` lines, accuracy to one decimal.
void WriteReportLines(std::ostream& out, const std::vector<NamedReport>& reports);

}  // namespace sitnet

#endif  // SITNET_EVAL_H_
