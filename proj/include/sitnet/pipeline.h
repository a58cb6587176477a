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

#ifndef SITNET_PIPELINE_H_
#define SITNET_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sitnet/bln.h"
#include "sitnet/disambiguation.h"
#include "sitnet/edges.h"
#include "sitnet/eval.h"
#include "sitnet/lexicon.h"
#include "sitnet/netgen.h"
#include "sitnet/relatedness.h"
#include "sitnet/text.h"

namespace sitnet {

// Offsets added to the master seed to derive per-stage seeds.
inline constexpr uint64_t kEvidenceSeedOffset = 101;
inline constexpr uint64_t kInferenceSeedOffset = 202;

struct PipelineConfig {
  std::string name = "scenario";
  std::filesystem::path lexicon;
  std::filesystem::path edges;
  std::filesystem::path corpus;
  std::filesystem::path stopwords;
  std::filesystem::path esa_corpus;
  std::filesystem::path seeds;
  std::filesystem::path gold;
  std::filesystem::path overrides;  // optional `atom<TAB>probability` lines
  std::string environment;
  std::string language = "en";
  int min_children = 2;
  double ic_threshold = 5.0;
  std::vector<std::string> blocklist = {"entity", "abstraction", "physical_entity"};
  double alpha = 0.5;
  double pseudocount = 1.0;
  size_t n_worlds = 5000;
  size_t max_parents = kMaxParents;
  EsaWeighting esa_weighting = EsaWeighting::kRawCount;
  int esa_min_doc_freq = 1;
  InferenceMethod method = InferenceMethod::kLikelihoodWeighting;
  size_t samples = 20000;
  size_t burn_in = 2000;
  uint64_t seed = 42;

  // Flat `key = value` file; `#` starts a comment; `include = path` merges
  // another file in place. Relative paths resolve against the file's folder.
  static PipelineConfig Load(const std::filesystem::path& path);
  void LoadInto(const std::filesystem::path& path, int depth = 0);
  // Sets one field from its textual value; `base` resolves relative paths.
  void Set(std::string_view key, std::string_view value, const std::filesystem::path& base = {});
  // Range checks on numeric fields. With `check_paths`, every required path
  // must exist.
  void Validate(bool check_paths = true) const;
  std::string Describe() const;
};

// Seeds file: one word per line, `#` comments. Normalized, first occurrence
// kept. Throws ConfigError when empty.
std::vector<std::string> ReadSeeds(std::istream& in);
std::vector<std::string> ReadSeedsFile(const std::filesystem::path& path);

// Loaded inputs shared by the pipeline stages. Not movable: the relatedness
// provider refers to the ESA index.
struct Resources {
  Lexicon lexicon;
  EdgeStore edges;
  IngestStats ingest;
  CorpusFrequencies corpus;
  StopwordSet stopwords;
  EsaIndex esa;
  std::unique_ptr<EsaProvider> provider;

  Resources() = default;
  Resources(const Resources&) = delete;
  Resources& operator=(const Resources&) = delete;
};

std::unique_ptr<Resources> LoadResources(const PipelineConfig& config);

struct GenerateResult {
  std::vector<std::string> seeds;
  SenseAssignment assignment;
  ConceptGraph graph;
  BlnModel model;
  AttachStats attach;
};

// disambiguation, taxonomy, compression, relations, locations, model,
// evidence, learning. Errors are rethrown as StageError.
GenerateResult RunGenerate(const PipelineConfig& config, const Resources& resources);

// Serialized forms of the three generate outputs.
std::string GraphText(const GenerateResult& result);
std::string ModelText(const GenerateResult& result);
std::string AssignmentText(const GenerateResult& result);

// Writes graph.txt, model.bln, and assignment.tsv into `dir`. Everything is
// serialized before the first file is opened.
void WriteGenerateOutputs(const GenerateResult& result, const std::filesystem::path& dir);

struct ScenarioEvaluation {
  std::string name;
  GenerateResult generated;
  ScenarioResults results;
  AccuracyReport report;
};

ScenarioEvaluation EvaluateScenario(const PipelineConfig& config, const Resources& resources);

// Levenshtein distance, used for near-match suggestions.
size_t EditDistance(std::string_view a, std::string_view b);
std::vector<std::string> NearMatches(std::string_view name,
                                     const std::vector<std::string>& candidates,
                                     size_t max_results = 5);

}  // namespace sitnet

#endif  // SITNET_PIPELINE_H_
