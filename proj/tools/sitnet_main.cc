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

// Command-line driver: generate, infer, evaluate.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sitnet/error.h"
#include "sitnet/eval.h"
#include "sitnet/inference.h"
#include "sitnet/pipeline.h"

namespace fs = std::filesystem;
using namespace sitnet;

namespace {

// Flags mirroring PipelineConfig keys. Values given on the command line win
// over the config file.
struct ConfigFlags {
  std::vector<std::string> configs;
  std::map<std::string, std::string> values;

  void Register(CLI::App* app, bool multiple_configs) {
    if (multiple_configs) {
      app->add_option("--config", configs, "Scenario config file (repeatable)")->required();
    } else {
      app->add_option("--config", configs, "Config file")->expected(0, 1);
    }
    const std::pair<const char*, const char*> keys[] = {
        {"seeds", "Seeds file"},
        {"environment", "Environment term for location pruning"},
        {"min-children", "Minimum children kept by compression"},
        {"ic-threshold", "Information content threshold"},
        {"alpha", "Weight of edge strength against relatedness"},
        {"pseudocount", "CPF smoothing pseudocount"},
        {"n-worlds", "Number of simulated evidence worlds"},
        {"samples", "Inference sample count"},
        {"burn-in", "Gibbs burn-in sweeps"},
        {"method", "Inference method: exact, lw, gibbs"},
        {"seed", "Master random seed"},
        {"lexicon", "Lexicon database directory"},
        {"edges", "Edge dump file"},
        {"corpus", "Corpus frequency file"},
        {"stopwords", "Stopword file"},
        {"esa-corpus", "ESA document corpus"},
        {"gold", "Gold standard file"},
        {"overrides", "Fragment override file"},
        {"name", "Scenario name"},
    };
    for (const auto& [key, help] : keys) {
      std::string k = key;
      auto* opt = app->add_option_function<std::string>(
          "--" + k, [this, k](const std::string& v) { values[k] = v; }, help);
      if (k == "method") opt->check(CLI::IsMember({"exact", "lw", "gibbs"}));
    }
  }

  PipelineConfig Build(const std::optional<fs::path>& config_path) const {
    PipelineConfig config;
    if (config_path) config.LoadInto(*config_path);
    for (const auto& [flag, value] : values) {
      std::string key = flag;
      std::replace(key.begin(), key.end(), '-', '_');
      config.Set(key, value, fs::current_path());
    }
    return config;
  }
};

std::vector<std::string> AllNames(const GroundNetwork& net) {
  std::vector<std::string> names;
  for (const auto& v : net.variables()) names.push_back(v.name);
  return names;
}

[[noreturn]] void UnknownVariable(const std::string& name, const GroundNetwork& net) {
  std::string what = "unknown variable " + name;
  std::vector<std::string> near = NearMatches(name, AllNames(net));
  if (!near.empty()) {
    what += "; did you mean:";
    for (const auto& n : near) what += " " + n;
  }
  throw ConfigError(what);
}

bool MatchesPattern(const Atom& pattern, bool any_predicate, const Atom& atom) {
  return (any_predicate || pattern.predicate == atom.predicate) &&
         (pattern.subject == "*" || pattern.subject == atom.subject) &&
         (pattern.target == "*" || pattern.target == atom.target);
}

int CmdGenerate(const ConfigFlags& flags, const fs::path& out_dir) {
  PipelineConfig config =
      flags.Build(flags.configs.empty() ? std::nullopt : std::optional<fs::path>(flags.configs[0]));
  config.Validate();
  std::unique_ptr<Resources> res = LoadResources(config);
  GenerateResult result = RunGenerate(config, *res);
  WriteGenerateOutputs(result, out_dir);
  std::cout << "nodes\t" << result.graph.nodes().size() << "\nedges\t" << result.graph.edge_count()
            << "\nfragments\t" << result.model.fragments.size() << "\noutput\t" << out_dir.string()
            << '\n';
  return 0;
}

int CmdInfer(const ConfigFlags& flags, const fs::path& model_path,
             const std::vector<std::string>& evidence_args,
             const std::vector<std::string>& query_args, std::vector<std::string> objects) {
  PipelineConfig config =
      flags.Build(flags.configs.empty() ? std::nullopt : std::optional<fs::path>(flags.configs[0]));
  config.Validate(false);
  std::ifstream in(model_path);
  if (!in) throw ConfigError("cannot open model " + model_path.string());
  BlnModel model = BlnModel::Read(in);

  Evidence evidence;
  std::vector<std::pair<Atom, bool>> patterns;  // atom, any predicate
  std::vector<std::string> seen_objects;
  auto note_object = [&](const std::string& o) {
    if (o != "*" && std::find(seen_objects.begin(), seen_objects.end(), o) == seen_objects.end()) {
      seen_objects.push_back(o);
    }
  };
  std::vector<std::pair<std::string, bool>> raw_evidence;
  for (const auto& arg : evidence_args) {
    size_t eq = arg.rfind('=');
    if (eq == std::string::npos)
      throw ConfigError("evidence must look like Atom=true|false: " + arg);
    std::string value = arg.substr(eq + 1);
    if (value != "true" && value != "false")
      throw ConfigError("evidence value must be true or false: " + arg);
    Atom atom = ParseAtom(arg.substr(0, eq));
    note_object(atom.subject);
    raw_evidence.emplace_back(FormatAtom(atom), value == "true");
  }
  for (const auto& arg : query_args) {
    std::string text = arg;
    bool any_predicate = text.starts_with("*(");
    if (any_predicate) text = "IsA" + text.substr(1);
    Atom atom = ParseAtom(text);
    note_object(atom.subject);
    patterns.emplace_back(atom, any_predicate);
  }
  if (objects.empty()) objects = seen_objects;
  if (objects.empty()) throw ConfigError("no objects given; use --objects or name them in atoms");

  GroundNetwork net = Ground(model.declaration, model.fragments, objects, model.constraints);
  for (const auto& [name, value] : raw_evidence) {
    if (!net.Index(name)) UnknownVariable(name, net);
    evidence[name] = value;
  }
  for (const auto& v : net.variables()) {
    if (v.auxiliary) evidence[v.name] = true;
  }
  std::vector<std::string> queries;
  for (const auto& [pattern, any] : patterns) {
    size_t before = queries.size();
    for (const auto& v : net.variables()) {
      if (!v.auxiliary && MatchesPattern(pattern, any, v.atom)) queries.push_back(v.name);
    }
    if (queries.size() == before) UnknownVariable(FormatAtom(pattern), net);
  }
  std::sort(queries.begin(), queries.end());
  queries.erase(std::unique(queries.begin(), queries.end()), queries.end());

  const uint64_t seed = config.seed + kInferenceSeedOffset;
  std::vector<std::pair<double, std::string>> ranked;
  switch (config.method) {
    case InferenceMethod::kExact:
      for (const auto& q : queries) ranked.emplace_back(InferExact(net, q, evidence), q);
      break;
    case InferenceMethod::kLikelihoodWeighting:
      for (const auto& [q, e] :
           LikelihoodWeightingMarginals(net, queries, evidence, config.samples, seed)) {
        if (e.zero_weight) std::cerr << "warning: zero total weight for " << q << '\n';
        ranked.emplace_back(e.probability, q);
      }
      break;
    case InferenceMethod::kGibbs:
      for (const auto& [q, p] :
           GibbsMarginals(net, queries, evidence, config.burn_in, config.samples, seed)) {
        ranked.emplace_back(p, q);
      }
      break;
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (const auto& [p, q] : ranked) std::printf("%.6f\t%s\n", p, q.c_str());
  return 0;
}

int CmdEvaluate(const ConfigFlags& flags, const std::optional<fs::path>& out_dir) {
  std::vector<NamedReport> reports;
  for (const auto& path : flags.configs) {
    PipelineConfig config = flags.Build(fs::path(path));
    config.Validate();
    if (config.gold.empty() || !fs::exists(config.gold)) {
      throw ConfigError("gold file missing for scenario " + config.name);
    }
    std::unique_ptr<Resources> res = LoadResources(config);
    ScenarioEvaluation eval = EvaluateScenario(config, *res);
    reports.emplace_back(eval.name, eval.report);
  }
  WriteReportTable(std::cout, reports);
  std::cout << '\n';
  WriteReportLines(std::cout, reports);
  if (out_dir) {
    fs::create_directories(*out_dir);
    std::ofstream table(*out_dir / "report.txt");
    WriteReportTable(table, reports);
    std::ofstream lines(*out_dir / "report.tsv");
    WriteReportLines(lines, reports);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Situated knowledge network generation and inference"};
  app.require_subcommand(1);

  ConfigFlags gen_flags, infer_flags, eval_flags;

  CLI::App* gen = app.add_subcommand("generate", "Build graph, model, and sense assignment");
  gen_flags.Register(gen, false);
  std::string gen_out = "out";
  gen->add_option("--out", gen_out, "Output directory");

  CLI::App* inf = app.add_subcommand("infer", "Query a model under evidence");
  infer_flags.Register(inf, false);
  std::string model_path;
  std::vector<std::string> evidence, queries, objects;
  inf->add_option("--model", model_path, "Model file")->required();
  inf->add_option("--evidence,-e", evidence, "Evidence such as IsA(obj1,sock)=true");
  inf->add_option("--query,-q", queries, "Query pattern such as AtLocation(obj1,*)")->required();
  inf->add_option("--objects", objects, "Objects to ground")->delimiter(',');

  CLI::App* ev = app.add_subcommand("evaluate", "Score scenarios against gold files");
  eval_flags.Register(ev, true);
  std::string eval_out;
  ev->add_option("--out", eval_out, "Directory for report.txt and report.tsv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return CmdGenerate(gen_flags, gen_out);
    if (inf->parsed()) return CmdInfer(infer_flags, model_path, evidence, queries, objects);
    if (ev->parsed()) {
      return CmdEvaluate(eval_flags,
                         eval_out.empty() ? std::nullopt : std::optional<fs::path>(eval_out));
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
