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

#ifndef SITNET_DISAMBIGUATION_H_
#define SITNET_DISAMBIGUATION_H_

#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sitnet/lexicon.h"
#include "sitnet/relatedness.h"

namespace sitnet {

struct PairCost {
  double cost = 1.0;
  size_t k = 0;  // index into the first sense list
  size_t l = 0;  // index into the second sense list
};

// 1 - wup similarity, with 1.0 for senses that share no ancestor.
double SenseDistance(const Lexicon& lexicon, const Synset& a, const Synset& b);

// Minimum of 1 - wup over all sense pairs. Ties keep the lowest (k, l).
PairCost PairwiseCost(const Lexicon& lexicon, std::span<const Synset* const> senses_i,
                      std::span<const Synset* const> senses_j);

struct SenseChoice {
  SynsetId sense;
  double cost = 0.0;  // cost of the tree edge that attached the word
};

struct SenseAssignment {
  std::map<std::string, SenseChoice> choices;
  double total_cost = 0.0;
  std::string start_word;
  std::vector<std::string> attach_order;  // start word first

  // `word<TAB>synset_id`, one line per seed, sorted by word.
  void Write(std::ostream& out) const;
  static SenseAssignment Read(std::istream& in);
};

// Tree-based seed disambiguation over noun senses. The start word is the
// seed with the fewest senses; for each of its senses a spanning tree is
// grown greedily, fixing each newly attached word to its cheapest sense.
// The cheapest tree wins, ties going to the better-ranked start sense.
SenseAssignment DisambiguateSeeds(const std::vector<std::string>& seeds, const Lexicon& lexicon);

struct WordSenseProfile {
  SynsetId sense;
  std::vector<std::string> words;
};

WordSenseProfile BuildWsp(const Synset& sense, const Lexicon& lexicon,
                          const StopwordSet& stopwords);

struct EdgeSense {
  SynsetId sense;
  double score = 0.0;
};

// Picks the noun sense of `ambiguous` whose profile is most related to
// `context`. Throws UnknownTermError if `ambiguous` has no noun sense.
EdgeSense DisambiguateEdge(std::string_view context, std::string_view ambiguous,
                           const Lexicon& lexicon, const RelatednessProvider& provider,
                           const StopwordSet& stopwords);

}  // namespace sitnet

#endif  // SITNET_DISAMBIGUATION_H_
