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

#ifndef SITNET_EDGES_H_
#define SITNET_EDGES_H_

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sitnet/lexicon.h"

namespace sitnet {

enum class Relation { kIsA = 0, kAtLocation, kHasProperty, kUsedFor };

inline constexpr std::array<Relation, 4> kAllRelations = {
    Relation::kIsA, Relation::kAtLocation, Relation::kHasProperty, Relation::kUsedFor};

std::string_view RelationName(Relation relation);

// Accepts "UsedFor" and "/r/UsedFor". Unknown labels yield nullopt.
std::optional<Relation> ParseRelation(std::string_view label);

struct ConceptEdge {
  std::string start;
  Relation relation = Relation::kIsA;
  std::string end;
  double weight = 1.0;
  std::optional<SynsetId> start_sense;
  std::optional<SynsetId> end_sense;
};

struct IngestStats {
  size_t lines = 0;
  size_t retained = 0;
  size_t merged = 0;
  size_t dropped_relation = 0;
  size_t dropped_language = 0;
  size_t malformed = 0;
  std::vector<std::string> warnings;  // first few malformed-line messages
};

// Indexed multiset of relation edges. Duplicate (start, relation, end)
// triples are merged keeping the larger weight. Iteration order is first
// occurrence.
class EdgeStore {
 public:
  // Reads the tab-separated dump. Five columns are the ConceptNet 5 CSV
  // layout (assertion, relation, start, end, JSON metadata); four columns are
  // `relation start end weight`. Malformed lines are counted and skipped.
  static EdgeStore Ingest(std::istream& in, std::string_view language = "en",
                          IngestStats* stats = nullptr);

  // Returns false if the edge merged into an existing one.
  bool Add(ConceptEdge edge);

  const std::vector<ConceptEdge>& edges() const { return edges_; }
  std::vector<const ConceptEdge*> From(std::string_view term, Relation relation) const;
  std::vector<const ConceptEdge*> To(std::string_view term, Relation relation) const;
  const ConceptEdge* Find(std::string_view start, Relation relation, std::string_view end) const;
  bool Contains(std::string_view start, Relation relation, std::string_view end) const {
    return Find(start, relation, end) != nullptr;
  }
  double MaxWeight(Relation relation) const;
  size_t size() const { return edges_.size(); }

 private:
  using Key = std::pair<std::string, Relation>;
  std::vector<ConceptEdge> edges_;
  std::map<std::tuple<std::string, Relation, std::string>, size_t> lookup_;
  std::map<Key, std::vector<size_t>> by_start_;
  std::map<Key, std::vector<size_t>> by_end_;
  std::array<double, 4> max_weight_{};
};

// True for terms like "satisfy_hunger": an underscore joining two
// alphabetic tokens.
bool IsMultiwordTerm(std::string_view term);

// Drops edges whose end term is a multiword phrase, unless the phrase is a
// lexicon lemma.
EdgeStore FilterMultiword(const EdgeStore& store, const Lexicon& lexicon);

// weight / max weight of the edge's relation. Throws DegenerateScaleError
// when that maximum is zero.
double NormalizedWeight(const ConceptEdge& edge, const EdgeStore& store);

}  // namespace sitnet

#endif  // SITNET_EDGES_H_
