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

#include "sitnet/eval.h"

#include <cstdio>
#include <set>

#include "sitnet/error.h"
#include "sitnet/inference.h"

namespace sitnet {

std::string FormatTriple(const TripleKey& key) {
  return std::string(RelationName(key.relation)) + "(" + key.seed + "," + key.target + ")";
}

std::optional<InferenceMethod> ParseMethod(std::string_view name) {
  if (name == "exact") return InferenceMethod::kExact;
  if (name == "lw") return InferenceMethod::kLikelihoodWeighting;
  if (name == "gibbs") return InferenceMethod::kGibbs;
  return std::nullopt;
}

std::string_view MethodName(InferenceMethod method) {
  switch (method) {
    case InferenceMethod::kExact:
      return "exact";
    case InferenceMethod::kLikelihoodWeighting:
      return "lw";
    case InferenceMethod::kGibbs:
      return "gibbs";
  }
  return "?";
}

std::string ScenarioObject(size_t index) { return "Object_" + std::to_string(index + 1); }

std::vector<std::string> ScenarioObjects(size_t count) {
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) out.push_back(ScenarioObject(i));
  return out;
}

ScenarioResults RunScenario(const GroundNetwork& net, const std::vector<std::string>& seeds,
                            const InferenceParams& params) {
  ScenarioResults results;
  for (size_t i = 0; i < seeds.size(); ++i) {
    const std::string object = ScenarioObject(i);
    const std::string seed = NormalizeTerm(seeds[i]);
    const std::string evidence_name = FormatAtom({Relation::kIsA, object, seed});
    if (!net.Index(evidence_name)) {
      throw Error("seed " + seed + " has no variable " + evidence_name);
    }
    Evidence evidence{{evidence_name, true}};
    std::vector<std::string> queries;
    for (const auto& v : net.variables()) {
      if (v.auxiliary) {
        bool global = v.name.find('(') == std::string::npos;
        if (global || v.name.ends_with("(" + object + ")")) evidence[v.name] = true;
        continue;
      }
      if (v.atom.subject == object) queries.push_back(v.name);
    }
    std::map<std::string, double> probabilities;
    switch (params.method) {
      case InferenceMethod::kExact:
        for (const auto& q : queries) probabilities[q] = InferExact(net, q, evidence);
        break;
      case InferenceMethod::kLikelihoodWeighting:
        for (const auto& [q, e] : LikelihoodWeightingMarginals(net, queries, evidence,
                                                               params.n_samples, params.seed + i)) {
          probabilities[q] = e.probability;
        }
        break;
      case InferenceMethod::kGibbs:
        probabilities = GibbsMarginals(net, queries, evidence, params.burn_in, params.n_samples,
                                       params.seed + i);
        break;
    }
    for (const auto& [name, p] : probabilities) {
      const Atom& atom = net.variable(net.IndexOrThrow(name)).atom;
      results[{seed, atom.predicate, atom.target}] = p;
    }
  }
  return results;
}

GoldStandard GoldStandard::Read(std::istream& in) {
  GoldStandard gold;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f[0] == "REL" && f.size() == 5) {
      std::optional<Relation> relation = ParseRelation(f[2]);
      if (!relation) throw ParseError("gold", lineno, "unknown relation " + f[2]);
      if (f[4] != "0" && f[4] != "1") throw ParseError("gold", lineno, "label must be 0 or 1");
      gold.relation_labels[{NormalizeTerm(f[1]), *relation, f[3]}] = f[4] == "1";
    } else if (f[0] == "SENSE" && f.size() == 3) {
      gold.sense_labels[NormalizeTerm(f[1])] = f[2];
    } else {
      throw ParseError("gold", lineno, "expected a REL or SENSE record");
    }
  }
  return gold;
}

void GoldStandard::Write(std::ostream& out) const {
  for (const auto& [seed, sense] : sense_labels) out << "SENSE\t" << seed << '\t' << sense << '\n';
  for (const auto& [key, label] : relation_labels) {
    out << "REL\t" << key.seed << '\t' << RelationName(key.relation) << '\t' << key.target << '\t'
        << (label ? 1 : 0) << '\n';
  }
}

void GoldStandard::Validate(const std::vector<std::string>& seeds) const {
  std::set<std::string> known;
  for (const auto& s : seeds) known.insert(NormalizeTerm(s));
  for (const auto& [key, label] : relation_labels) {
    if (!known.contains(key.seed)) throw ConfigError("gold labels unknown seed " + key.seed);
  }
  for (const auto& [seed, sense] : sense_labels) {
    if (!known.contains(seed)) throw ConfigError("gold labels unknown seed " + seed);
  }
}

AccuracyReport Score(const ScenarioResults& results, const GoldStandard& gold,
                     const SenseAssignment* assignment) {
  AccuracyReport report;
  std::vector<std::string> missing;
  for (const auto& [key, label] : gold.relation_labels) {
    auto it = results.find(key);
    if (it == results.end()) {
      missing.push_back(FormatTriple(key));
      continue;
    }
    bool predicted = it->second > 0.5;
    AccuracyCell& cell = report.per_relation[key.relation];
    ++cell.total;
    if (predicted == label) ++cell.correct;
  }
  if (!missing.empty()) {
    std::string what = std::to_string(missing.size()) + " gold triples missing from results:";
    for (size_t i = 0; i < missing.size() && i < 10; ++i) what += " " + missing[i];
    throw CoverageError(what, std::move(missing));
  }
  if (assignment != nullptr && !gold.sense_labels.empty()) {
    AccuracyCell cell;
    for (const auto& [seed, sense] : gold.sense_labels) {
      ++cell.total;
      auto it = assignment->choices.find(seed);
      if (it != assignment->choices.end() && it->second.sense == sense) ++cell.correct;
    }
    report.wsd = cell;
  }
  return report;
}

namespace {

std::string OneDecimal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

}  // namespace

void WriteReportTable(std::ostream& out, const std::vector<NamedReport>& reports) {
  size_t name_width = 8;
  for (const auto& [name, report] : reports) name_width = std::max(name_width, name.size());
  auto pad_left = [](const std::string& s, size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  auto pad_right = [](const std::string& s, size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
  };
  out << pad_right("Scenario", name_width);
  for (Relation r : kAllRelations) out << "  " << pad_left(std::string(RelationName(r)), 11);
  out << "  " << pad_left("WSD", 6) << '\n';
  for (const auto& [name, report] : reports) {
    out << pad_right(name, name_width);
    for (Relation r : kAllRelations) {
      auto it = report.per_relation.find(r);
      out << "  "
          << pad_left(it == report.per_relation.end() ? "-" : OneDecimal(it->second.Percent()), 11);
    }
    out << "  " << pad_left(report.wsd ? OneDecimal(report.wsd->Percent()) : "-", 6) << '\n';
  }
}

void WriteReportLines(std::ostream& out, const std::vector<NamedReport>& reports) {
  for (const auto& [name, report] : reports) {
    for (const auto& [relation, cell] : report.per_relation) {
      out << name << '\t' << RelationName(relation) << '\t' << OneDecimal(cell.Percent()) << '\n';
    }
    if (report.wsd) out << name << "\tWSD\t" << OneDecimal(report.wsd->Percent()) << '\n';
  }
}

}  // namespace sitnet
