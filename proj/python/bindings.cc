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

// Python bindings for the main pipeline operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "sitnet/disambiguation.h"
#include "sitnet/error.h"
#include "sitnet/inference.h"
#include "sitnet/pipeline.h"

namespace py = pybind11;
using namespace sitnet;

namespace {

struct Network {
  GroundNetwork net;
};

BlnModel ModelFromText(const std::string& text) {
  std::istringstream in(text);
  return BlnModel::Read(in);
}

std::string ModelToText(const BlnModel& model) {
  std::ostringstream out;
  model.Write(out);
  return out.str();
}

py::dict SynsetDict(const Synset& s) {
  py::dict d;
  d["id"] = s.id;
  d["lemmas"] = s.lemmas;
  d["gloss"] = s.gloss;
  d["hypernyms"] = s.hypernyms;
  return d;
}

py::dict ReportDict(const AccuracyReport& report) {
  py::dict d;
  for (const auto& [relation, cell] : report.per_relation) {
    d[py::str(std::string(RelationName(relation)))] = cell.Percent();
  }
  if (report.wsd) d["WSD"] = report.wsd->Percent();
  return d;
}

std::map<std::string, std::string> Senses(const SenseAssignment& a) {
  std::map<std::string, std::string> out;
  for (const auto& [word, choice] : a.choices) out[word] = choice.sense;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sitnet, m) {
  m.doc() = "Situated knowledge network generation and BLN inference";

  py::register_exception<Error>(m, "SitnetError", PyExc_RuntimeError);
  auto base = m.attr("SitnetError");
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<UnknownSeedError>(m, "UnknownSeedError", base);
  py::register_exception<CoverageError>(m, "CoverageError", base);
  py::register_exception<TooLargeError>(m, "TooLargeError", base);
  py::register_exception<ErgodicityError>(m, "ErgodicityError", base);
  py::register_exception<StageError>(m, "StageError", base);

  py::class_<PipelineConfig>(m, "Config")
      .def(py::init<>())
      .def_static("load", &PipelineConfig::Load, py::arg("path"))
      .def(
          "set",
          [](PipelineConfig& c, const std::string& key, const std::string& value) {
            c.Set(key, value, std::filesystem::current_path());
          },
          py::arg("key"), py::arg("value"))
      .def("validate", &PipelineConfig::Validate, py::arg("check_paths") = true)
      .def("describe", &PipelineConfig::Describe)
      .def_readwrite("name", &PipelineConfig::name)
      .def_readwrite("environment", &PipelineConfig::environment)
      .def_readwrite("seeds", &PipelineConfig::seeds)
      .def_readwrite("gold", &PipelineConfig::gold)
      .def_readwrite("min_children", &PipelineConfig::min_children)
      .def_readwrite("ic_threshold", &PipelineConfig::ic_threshold)
      .def_readwrite("alpha", &PipelineConfig::alpha)
      .def_readwrite("pseudocount", &PipelineConfig::pseudocount)
      .def_readwrite("n_worlds", &PipelineConfig::n_worlds)
      .def_readwrite("samples", &PipelineConfig::samples)
      .def_readwrite("burn_in", &PipelineConfig::burn_in)
      .def_readwrite("seed", &PipelineConfig::seed)
      .def_property(
          "method", [](const PipelineConfig& c) { return std::string(MethodName(c.method)); },
          [](PipelineConfig& c, const std::string& v) { c.Set("method", v); });

  py::class_<Resources, std::unique_ptr<Resources>>(m, "Resources")
      .def(
          "senses",
          [](const Resources& r, const std::string& word) {
            py::list out;
            for (const Synset* s : r.lexicon.Senses(word)) out.append(SynsetDict(*s));
            return out;
          },
          py::arg("word"))
      .def(
          "wup",
          [](const Resources& r, const std::string& a, const std::string& b) {
            const Synset* sa = r.lexicon.Find(a);
            const Synset* sb = r.lexicon.Find(b);
            if (sa == nullptr || sb == nullptr) throw ConfigError("unknown synset id");
            return WupSimilarity(r.lexicon, *sa, *sb);
          },
          py::arg("a"), py::arg("b"))
      .def(
          "information_content",
          [](const Resources& r, const std::string& word) {
            return InformationContent(word, r.corpus);
          },
          py::arg("word"))
      .def(
          "relatedness",
          [](const Resources& r, const std::string& a, const std::string& b) {
            return r.provider->Score(a, b);
          },
          py::arg("a"), py::arg("b"));

  m.def("load_resources", &LoadResources, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "disambiguate",
      [](const std::vector<std::string>& seeds, const Resources& r) {
        SenseAssignment a = DisambiguateSeeds(seeds, r.lexicon);
        return py::make_tuple(Senses(a), a.total_cost);
      },
      py::arg("seeds"), py::arg("resources"));

  py::class_<GenerateResult>(m, "Generated")
      .def_readonly("seeds", &GenerateResult::seeds)
      .def_property_readonly("senses", [](const GenerateResult& g) { return Senses(g.assignment); })
      .def_property_readonly("graph_text", &GraphText)
      .def_property_readonly("model_text", &ModelText)
      .def_property_readonly("assignment_text", &AssignmentText)
      .def_property_readonly("node_count",
                             [](const GenerateResult& g) { return g.graph.nodes().size(); })
      .def_property_readonly("edge_count",
                             [](const GenerateResult& g) { return g.graph.edge_count(); })
      .def_property_readonly("model", [](const GenerateResult& g) { return g.model; })
      .def("write", &WriteGenerateOutputs, py::arg("directory"));

  m.def("generate", &RunGenerate, py::arg("config"), py::arg("resources"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "evaluate",
      [](const PipelineConfig& config, const Resources& r) {
        ScenarioEvaluation e;
        {
          py::gil_scoped_release release;
          e = EvaluateScenario(config, r);
        }
        py::dict probabilities;
        for (const auto& [key, p] : e.results) {
          probabilities[py::make_tuple(key.seed, std::string(RelationName(key.relation)),
                                       key.target)] = p;
        }
        return py::make_tuple(ReportDict(e.report), probabilities);
      },
      py::arg("config"), py::arg("resources"));

  py::class_<BlnModel>(m, "Model")
      .def_static("from_text", &ModelFromText, py::arg("text"))
      .def("to_text", &ModelToText)
      .def_property_readonly("fragment_count", [](const BlnModel& b) { return b.fragments.size(); })
      .def(
          "ground",
          [](const BlnModel& b, const std::vector<std::string>& objects) {
            return Network{Ground(b.declaration, b.fragments, objects, b.constraints)};
          },
          py::arg("objects"));

  py::class_<Network>(m, "Network")
      .def_property_readonly("variables",
                             [](const Network& n) {
                               std::vector<std::string> names;
                               for (const auto& v : n.net.variables()) names.push_back(v.name);
                               return names;
                             })
      .def(
          "infer_exact",
          [](const Network& n, const std::string& query, const Evidence& evidence) {
            return InferExact(n.net, query, evidence);
          },
          py::arg("query"), py::arg("evidence") = Evidence{},
          py::call_guard<py::gil_scoped_release>())
      .def(
          "infer_lw",
          [](const Network& n, const std::string& query, const Evidence& evidence, size_t samples,
             uint64_t seed) {
            Estimate e = InferLikelihoodWeighting(n.net, query, evidence, samples, seed);
            return e.probability;
          },
          py::arg("query"), py::arg("evidence") = Evidence{}, py::arg("samples") = 20000,
          py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>())
      .def(
          "infer_gibbs",
          [](const Network& n, const std::string& query, const Evidence& evidence, size_t burn_in,
             size_t samples,
             uint64_t seed) { return InferGibbs(n.net, query, evidence, burn_in, samples, seed); },
          py::arg("query"), py::arg("evidence") = Evidence{}, py::arg("burn_in") = 2000,
          py::arg("samples") = 20000, py::arg("seed") = 1,
          py::call_guard<py::gil_scoped_release>());
}
