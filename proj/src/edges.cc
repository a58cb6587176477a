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

#include "sitnet/edges.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "json.hpp"
#include "sitnet/error.h"

namespace sitnet {

namespace {

constexpr size_t kMaxWarnings = 20;

struct ParsedTerm {
  std::string term;
  std::string language;  // empty for bare terms
  std::optional<SynsetId> sense;
};

bool LooksLikeSynsetId(std::string_view s) {
  if (s.size() != 10 || s[8] != '-') return false;
  for (size_t i = 0; i < 8; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return s[9] == 'n' || s[9] == 'v' || s[9] == 'a' || s[9] == 'r';
}

// "/c/en/frying_pan/n/03400231-n" -> {frying_pan, en, 03400231-n}.
std::optional<ParsedTerm> ParseTerm(std::string_view uri) {
  ParsedTerm out;
  if (uri.starts_with("/c/")) {
    std::vector<std::string> parts;
    size_t start = 3;
    while (start <= uri.size()) {
      size_t slash = uri.find('/', start);
      if (slash == std::string_view::npos) slash = uri.size();
      parts.emplace_back(uri.substr(start, slash - start));
      start = slash + 1;
    }
    if (parts.size() < 2 || parts[0].empty() || parts[1].empty()) return std::nullopt;
    out.language = parts[0];
    out.term = NormalizeTerm(parts[1]);
    if (parts.size() >= 3 && LooksLikeSynsetId(parts.back())) out.sense = parts.back();
  } else {
    out.term = NormalizeTerm(uri);
  }
  if (out.term.empty()) return std::nullopt;
  return out;
}

std::optional<double> ParseWeight(std::string_view text) {
  std::string copy(Trim(text));
  if (copy.empty()) return std::nullopt;
  char* end = nullptr;
  double value = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size()) return std::nullopt;
  return value;
}

void Warn(IngestStats& stats, size_t lineno, const std::string& what) {
  ++stats.malformed;
  if (stats.warnings.size() < kMaxWarnings) {
    stats.warnings.push_back("line " + std::to_string(lineno) + ": " + what);
  }
}

}  // namespace

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kIsA:
      return "IsA";
    case Relation::kAtLocation:
      return "AtLocation";
    case Relation::kHasProperty:
      return "HasProperty";
    case Relation::kUsedFor:
      return "UsedFor";
  }
  return "?";
}

std::optional<Relation> ParseRelation(std::string_view label) {
  if (label.starts_with("/r/")) label.remove_prefix(3);
  for (Relation r : kAllRelations) {
    if (RelationName(r) == label) return r;
  }
  return std::nullopt;
}

EdgeStore EdgeStore::Ingest(std::istream& in, std::string_view language, IngestStats* stats_out) {
  IngestStats stats;
  EdgeStore store;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    ++stats.lines;
    std::vector<std::string> f = SplitTabs(line);
    std::string relation_label, start_uri, end_uri;
    double weight = 1.0;
    if (f.size() == 5) {
      relation_label = f[1];
      start_uri = f[2];
      end_uri = f[3];
      std::string_view meta = Trim(f[4]);
      if (!meta.empty()) {
        auto json = nlohmann::json::parse(meta, nullptr, /*allow_exceptions=*/false);
        if (json.is_discarded() || !json.is_object()) {
          Warn(stats, lineno, "bad metadata JSON");
          continue;
        }
        auto it = json.find("weight");
        if (it != json.end()) {
          if (!it->is_number()) {
            Warn(stats, lineno, "non-numeric weight");
            continue;
          }
          weight = it->get<double>();
        }
      }
    } else if (f.size() == 4) {
      relation_label = f[0];
      start_uri = f[1];
      end_uri = f[2];
      std::optional<double> w = ParseWeight(f[3]);
      if (!w) {
        Warn(stats, lineno, "bad weight '" + f[3] + "'");
        continue;
      }
      weight = *w;
    } else {
      Warn(stats, lineno, "expected 4 or 5 columns, got " + std::to_string(f.size()));
      continue;
    }
    std::optional<Relation> relation = ParseRelation(Trim(relation_label));
    if (!relation) {
      ++stats.dropped_relation;
      continue;
    }
    std::optional<ParsedTerm> start = ParseTerm(Trim(start_uri));
    std::optional<ParsedTerm> end = ParseTerm(Trim(end_uri));
    if (!start || !end) {
      Warn(stats, lineno, "bad concept term");
      continue;
    }
    auto language_ok = [&](const ParsedTerm& t) {
      return t.language.empty() || t.language == language;
    };
    if (!language_ok(*start) || !language_ok(*end)) {
      ++stats.dropped_language;
      continue;
    }
    if (!(weight >= 0.0)) {
      Warn(stats, lineno, "negative weight");
      continue;
    }
    if (*relation == Relation::kAtLocation && start->term == end->term) {
      Warn(stats, lineno, "self-located concept");
      continue;
    }
    ConceptEdge edge{start->term, *relation, end->term, weight, start->sense, end->sense};
    if (store.Add(std::move(edge))) {
      ++stats.retained;
    } else {
      ++stats.merged;
    }
  }
  if (stats_out != nullptr) *stats_out = std::move(stats);
  return store;
}

bool EdgeStore::Add(ConceptEdge edge) {
  const size_t r = static_cast<size_t>(edge.relation);
  max_weight_[r] = std::max(max_weight_[r], edge.weight);
  auto key = std::make_tuple(edge.start, edge.relation, edge.end);
  auto it = lookup_.find(key);
  if (it != lookup_.end()) {
    ConceptEdge& existing = edges_[it->second];
    existing.weight = std::max(existing.weight, edge.weight);
    if (!existing.start_sense) existing.start_sense = edge.start_sense;
    if (!existing.end_sense) existing.end_sense = edge.end_sense;
    return false;
  }
  size_t index = edges_.size();
  lookup_.emplace(std::move(key), index);
  by_start_[{edge.start, edge.relation}].push_back(index);
  by_end_[{edge.end, edge.relation}].push_back(index);
  edges_.push_back(std::move(edge));
  return true;
}

std::vector<const ConceptEdge*> EdgeStore::From(std::string_view term, Relation relation) const {
  std::vector<const ConceptEdge*> out;
  auto it = by_start_.find({std::string(term), relation});
  if (it == by_start_.end()) return out;
  for (size_t i : it->second) out.push_back(&edges_[i]);
  return out;
}

std::vector<const ConceptEdge*> EdgeStore::To(std::string_view term, Relation relation) const {
  std::vector<const ConceptEdge*> out;
  auto it = by_end_.find({std::string(term), relation});
  if (it == by_end_.end()) return out;
  for (size_t i : it->second) out.push_back(&edges_[i]);
  return out;
}

const ConceptEdge* EdgeStore::Find(std::string_view start, Relation relation,
                                   std::string_view end) const {
  auto it = lookup_.find({std::string(start), relation, std::string(end)});
  return it == lookup_.end() ? nullptr : &edges_[it->second];
}

double EdgeStore::MaxWeight(Relation relation) const {
  return max_weight_[static_cast<size_t>(relation)];
}

bool IsMultiwordTerm(std::string_view term) {
  for (size_t i = 1; i + 1 < term.size(); ++i) {
    if (term[i] == '_' && std::isalpha(static_cast<unsigned char>(term[i - 1])) &&
        std::isalpha(static_cast<unsigned char>(term[i + 1]))) {
      return true;
    }
  }
  return false;
}

EdgeStore FilterMultiword(const EdgeStore& store, const Lexicon& lexicon) {
  EdgeStore out;
  for (const ConceptEdge& edge : store.edges()) {
    if (IsMultiwordTerm(edge.end) && !lexicon.HasLemma(edge.end)) continue;
    out.Add(edge);
  }
  return out;
}

double NormalizedWeight(const ConceptEdge& edge, const EdgeStore& store) {
  double max = store.MaxWeight(edge.relation);
  if (!(max > 0.0)) {
    throw DegenerateScaleError("zero maximum weight for relation " +
                               std::string(RelationName(edge.relation)));
  }
  return edge.weight / max;
}

}  // namespace sitnet
