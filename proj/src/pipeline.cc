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

#include "sitnet/pipeline.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sitnet/error.h"

namespace sitnet {
namespace fs = std::filesystem;

namespace {

constexpr int kMaxIncludeDepth = 8;

std::ifstream OpenOrThrow(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

fs::path ResolvePath(std::string_view value, const fs::path& base) {
  fs::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

template <typename F>
auto RunStage(std::string_view stage, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const ConfigError& e) {
    throw ConfigError("stage " + std::string(stage) + ": " + e.what());
  } catch (const std::exception& e) {
    throw StageError(std::string(stage), e.what());
  }
}

}  // namespace

PipelineConfig PipelineConfig::Load(const fs::path& path) {
  PipelineConfig config;
  config.LoadInto(path);
  return config;
}

void PipelineConfig::LoadInto(const fs::path& path, int depth) {
  if (depth > kMaxIncludeDepth) throw ConfigError("include nesting too deep at " + path.string());
  std::ifstream in = OpenOrThrow(path);
  const fs::path base = path.parent_path();
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = Trim(body);
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(path.string(), lineno, "expected key = value");
    }
    std::string_view key = Trim(body.substr(0, eq));
    std::string_view value = Trim(body.substr(eq + 1));
    try {
      if (key == "include") {
        LoadInto(ResolvePath(value, base), depth + 1);
      } else {
        Set(key, value, base);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(path.string(), lineno, e.what());
    }
  }
}

void PipelineConfig::Set(std::string_view key, std::string_view value, const fs::path& base) {
  if (key == "name") {
    name = value;
  } else if (key == "lexicon") {
    lexicon = ResolvePath(value, base);
  } else if (key == "edges") {
    edges = ResolvePath(value, base);
  } else if (key == "corpus") {
    corpus = ResolvePath(value, base);
  } else if (key == "stopwords") {
    stopwords = ResolvePath(value, base);
  } else if (key == "esa_corpus") {
    esa_corpus = ResolvePath(value, base);
  } else if (key == "seeds") {
    seeds = ResolvePath(value, base);
  } else if (key == "gold") {
    gold = ResolvePath(value, base);
  } else if (key == "overrides") {
    overrides = value.empty() ? fs::path() : ResolvePath(value, base);
  } else if (key == "environment") {
    environment = NormalizeTerm(value);
  } else if (key == "language") {
    language = value;
  } else if (key == "min_children") {
    min_children = ParseNumber<int>(key, value);
  } else if (key == "ic_threshold") {
    ic_threshold = ParseNumber<double>(key, value);
  } else if (key == "blocklist") {
    blocklist.clear();
    std::string item;
    std::istringstream in{std::string(value)};
    while (std::getline(in, item, ',')) {
      if (!Trim(item).empty()) blocklist.push_back(NormalizeTerm(item));
    }
  } else if (key == "alpha") {
    alpha = ParseNumber<double>(key, value);
  } else if (key == "pseudocount") {
    pseudocount = ParseNumber<double>(key, value);
  } else if (key == "n_worlds") {
    n_worlds = ParseNumber<size_t>(key, value);
  } else if (key == "max_parents") {
    max_parents = ParseNumber<size_t>(key, value);
  } else if (key == "esa_weighting") {
    if (value == "raw_count") {
      esa_weighting = EsaWeighting::kRawCount;
    } else if (value == "tfidf") {
      esa_weighting = EsaWeighting::kTfidf;
    } else {
      throw ConfigError("esa_weighting must be raw_count or tfidf");
    }
  } else if (key == "esa_min_doc_freq") {
    esa_min_doc_freq = ParseNumber<int>(key, value);
  } else if (key == "method") {
    std::optional<InferenceMethod> m = ParseMethod(value);
    if (!m) throw ConfigError("method must be exact, lw, or gibbs");
    method = *m;
  } else if (key == "samples") {
    samples = ParseNumber<size_t>(key, value);
  } else if (key == "burn_in") {
    burn_in = ParseNumber<size_t>(key, value);
  } else if (key == "seed") {
    seed = ParseNumber<uint64_t>(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void PipelineConfig::Validate(bool check_paths) const {
  if (min_children < 1) throw ConfigError("min_children must be at least 1");
  if (!(ic_threshold >= 0.0)) throw ConfigError("ic_threshold must be non-negative");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (!(pseudocount >= 0.0)) throw ConfigError("pseudocount must be non-negative");
  if (n_worlds < 1) throw ConfigError("n_worlds must be at least 1");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (max_parents < 1 || max_parents > 20) throw ConfigError("max_parents must lie in [1, 20]");
  if (esa_min_doc_freq < 1) throw ConfigError("esa_min_doc_freq must be at least 1");
  if (!check_paths) return;
  const std::pair<const char*, const fs::path*> required[] = {
      {"lexicon", &lexicon},     {"edges", &edges},           {"corpus", &corpus},
      {"stopwords", &stopwords}, {"esa_corpus", &esa_corpus}, {"seeds", &seeds}};
  for (const auto& [key, path] : required) {
    if (path->empty()) throw ConfigError(std::string("missing config value: ") + key);
    if (!fs::exists(*path)) throw ConfigError(std::string(key) + " not found: " + path->string());
  }
  if (!overrides.empty() && !fs::exists(overrides)) {
    throw ConfigError("overrides not found: " + overrides.string());
  }
}

std::string PipelineConfig::Describe() const {
  std::ostringstream out;
  out << "name = " << name << "\nenvironment = " << environment
      << "\nmin_children = " << min_children << "\nic_threshold = " << FormatDouble(ic_threshold)
      << "\nalpha = " << FormatDouble(alpha) << "\npseudocount = " << FormatDouble(pseudocount)
      << "\nn_worlds = " << n_worlds << "\nmethod = " << MethodName(method)
      << "\nsamples = " << samples << "\nburn_in = " << burn_in << "\nseed = " << seed << '\n';
  return out.str();
}

std::vector<std::string> ReadSeeds(std::istream& in) {
  std::vector<std::string> seeds;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = line;
    if (size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = Trim(body);
    if (body.empty()) continue;
    std::string seed = NormalizeTerm(body);
    if (seen.insert(seed).second) seeds.push_back(seed);
  }
  if (seeds.empty()) throw ConfigError("seeds file lists no seed words");
  return seeds;
}

std::vector<std::string> ReadSeedsFile(const fs::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ReadSeeds(in);
}

std::unique_ptr<Resources> LoadResources(const PipelineConfig& config) {
  auto res = std::make_unique<Resources>();
  RunStage("load lexicon", [&] { res->lexicon = Lexicon::Load(config.lexicon); });
  RunStage("load edges", [&] {
    std::ifstream in = OpenOrThrow(config.edges);
    EdgeStore raw = EdgeStore::Ingest(in, config.language, &res->ingest);
    res->edges = FilterMultiword(raw, res->lexicon);
  });
  RunStage("load corpus", [&] {
    std::ifstream in = OpenOrThrow(config.corpus);
    res->corpus = CorpusFrequencies::Read(in);
  });
  RunStage("load stopwords", [&] {
    std::ifstream in = OpenOrThrow(config.stopwords);
    res->stopwords = ReadStopwords(in);
  });
  RunStage("build esa index", [&] {
    std::ifstream in = OpenOrThrow(config.esa_corpus);
    res->esa = EsaIndex::Build(EsaIndex::ReadCorpus(in), config.esa_weighting, res->stopwords,
                               config.esa_min_doc_freq);
  });
  res->provider = std::make_unique<EsaProvider>(res->esa, res->stopwords);
  return res;
}

namespace {

void ApplyOverridesFile(const fs::path& path, BlnModel& model) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 2) throw ParseError(path.string(), lineno, "expected atom<TAB>probability");
    Atom atom = ParseAtom(f[0]);
    double value = ParseNumber<double>("override", f[1]);
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ParseError(path.string(), lineno, "override probability outside [0, 1]");
    }
    bool found = false;
    for (Fragment& fragment : model.fragments) {
      if (fragment.child == atom) {
        fragment.override_value = value;
        fragment.ApplyOverride();
        found = true;
      }
    }
    if (!found) throw ParseError(path.string(), lineno, "no fragment for " + f[0]);
  }
}

}  // namespace

GenerateResult RunGenerate(const PipelineConfig& config, const Resources& res) {
  GenerateResult out;
  out.seeds = RunStage("read seeds", [&] { return ReadSeedsFile(config.seeds); });
  out.assignment =
      RunStage("disambiguate seeds", [&] { return DisambiguateSeeds(out.seeds, res.lexicon); });
  ConceptGraph graph =
      RunStage("add isa paths", [&] { return AddIsaPaths(out.assignment, res.lexicon); });
  graph = RunStage("compress", [&] {
    CompressOptions options;
    options.min_children = config.min_children;
    options.ic_threshold = config.ic_threshold;
    options.blocklist = {config.blocklist.begin(), config.blocklist.end()};
    return Compress(graph, res.corpus, options);
  });
  graph = RunStage("attach relations", [&] {
    return AttachRelations(graph, res.edges, res.lexicon, *res.provider, out.assignment,
                           res.stopwords, &out.attach);
  });
  if (!config.environment.empty()) {
    graph = RunStage("attach locations",
                     [&] { return AttachLocationsTwoHop(graph, res.edges, config.environment); });
  }
  RunStage("validate graph", [&] { graph.Validate(); });
  out.model = RunStage("build model", [&] { return ModelFromGraph(graph, config.max_parents); });
  EvidenceSet evidence = RunStage("simulate evidence", [&] {
    SimulationOptions options;
    options.alpha = config.alpha;
    options.n_worlds = config.n_worlds;
    options.seed = config.seed + kEvidenceSeedOffset;
    return SimulateEvidence(graph, *res.provider, options);
  });
  out.model.fragments = RunStage("learn cpfs", [&] {
    return LearnCpfs(std::move(out.model.fragments), evidence, config.pseudocount);
  });
  if (!config.overrides.empty()) {
    RunStage("apply overrides", [&] { ApplyOverridesFile(config.overrides, out.model); });
  }
  out.graph = std::move(graph);
  return out;
}

std::string GraphText(const GenerateResult& result) {
  std::ostringstream out;
  result.graph.Write(out);
  return out.str();
}

std::string ModelText(const GenerateResult& result) {
  std::ostringstream out;
  result.model.Write(out);
  return out.str();
}

std::string AssignmentText(const GenerateResult& result) {
  std::ostringstream out;
  result.assignment.Write(out);
  return out.str();
}

void WriteGenerateOutputs(const GenerateResult& result, const fs::path& dir) {
  const std::pair<const char*, std::string> files[] = {{"graph.txt", GraphText(result)},
                                                       {"model.bln", ModelText(result)},
                                                       {"assignment.tsv", AssignmentText(result)}};
  fs::create_directories(dir);
  for (const auto& [name, text] : files) {
    fs::path target = dir / name;
    fs::path temp = dir / (std::string(name) + ".tmp");
    {
      std::ofstream out(temp, std::ios::binary);
      if (!out) throw Error("cannot write " + temp.string());
      out << text;
      if (!out) throw Error("write failed for " + temp.string());
    }
    fs::rename(temp, target);
  }
}

ScenarioEvaluation EvaluateScenario(const PipelineConfig& config, const Resources& res) {
  ScenarioEvaluation eval;
  eval.name = config.name;
  eval.generated = RunGenerate(config, res);
  GoldStandard gold = RunStage("read gold", [&] {
    std::ifstream in = OpenOrThrow(config.gold);
    GoldStandard g = GoldStandard::Read(in);
    g.Validate(eval.generated.seeds);
    return g;
  });
  GroundNetwork net = RunStage("ground", [&] {
    const BlnModel& model = eval.generated.model;
    return Ground(model.declaration, model.fragments, ScenarioObjects(eval.generated.seeds.size()),
                  model.constraints);
  });
  eval.results = RunStage("infer", [&] {
    InferenceParams params;
    params.method = config.method;
    params.n_samples = config.samples;
    params.burn_in = config.burn_in;
    params.seed = config.seed + kInferenceSeedOffset;
    return RunScenario(net, eval.generated.seeds, params);
  });
  eval.report =
      RunStage("score", [&] { return Score(eval.results, gold, &eval.generated.assignment); });
  return eval;
}

size_t EditDistance(std::string_view a, std::string_view b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::string> NearMatches(std::string_view name,
                                     const std::vector<std::string>& candidates,
                                     size_t max_results) {
  std::vector<std::pair<size_t, std::string>> scored;
  for (const auto& c : candidates) scored.emplace_back(EditDistance(name, c), c);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, c] : scored) {
    if (out.size() >= max_results) break;
    if (d <= std::max<size_t>(3, name.size() / 3)) out.push_back(c);
  }
  return out;
}

}  // namespace sitnet
