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

#include "sitnet/disambiguation.h"

#include <limits>
#include <unordered_set>

#include "sitnet/error.h"

namespace sitnet {

double SenseDistance(const Lexicon& lexicon, const Synset& a, const Synset& b) {
  try {
    return 1.0 - WupSimilarity(lexicon, a, b);
  } catch (const SimilarityUndefined&) {
    return 1.0;
  }
}

PairCost PairwiseCost(const Lexicon& lexicon, std::span<const Synset* const> senses_i,
                      std::span<const Synset* const> senses_j) {
  PairCost best{std::numeric_limits<double>::infinity(), 0, 0};
  for (size_t k = 0; k < senses_i.size(); ++k) {
    for (size_t l = 0; l < senses_j.size(); ++l) {
      double cost = SenseDistance(lexicon, *senses_i[k], *senses_j[l]);
      if (cost < best.cost) best = {cost, k, l};
    }
  }
  if (senses_i.empty() || senses_j.empty()) best.cost = 1.0;
  return best;
}

void SenseAssignment::Write(std::ostream& out) const {
  for (const auto& [word, choice] : choices) out << word << '\t' << choice.sense << '\n';
}

SenseAssignment SenseAssignment::Read(std::istream& in) {
  SenseAssignment assignment;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 2) throw ParseError("assignment", lineno, "expected word<TAB>synset_id");
    assignment.choices[f[0]] = {f[1], 0.0};
  }
  return assignment;
}

namespace {

struct Tree {
  std::vector<size_t> sense_of;  // per word, index into its sense list
  std::vector<double> attach_cost;
  std::vector<size_t> order;
  double total = 0.0;
};

// Greedy growth from word `start` fixed to sense `start_sense`. `distance`
// holds 1 - wup for every pair of global sense indices.
Tree GrowTree(const std::vector<std::vector<size_t>>& sense_ids, size_t start, size_t start_sense,
              const std::vector<std::vector<double>>& distance) {
  const size_t n = sense_ids.size();
  Tree tree;
  tree.sense_of.assign(n, 0);
  tree.attach_cost.assign(n, 0.0);
  std::vector<bool> attached(n, false);
  attached[start] = true;
  tree.sense_of[start] = start_sense;
  tree.order.push_back(start);
  for (size_t step = 1; step < n; ++step) {
    double best_cost = std::numeric_limits<double>::infinity();
    size_t best_word = n, best_sense = 0;
    for (size_t w = 0; w < n; ++w) {
      if (attached[w]) continue;
      for (size_t s = 0; s < sense_ids[w].size(); ++s) {
        for (size_t u : tree.order) {
          double c = distance[sense_ids[w][s]][sense_ids[u][tree.sense_of[u]]];
          // Strict comparison: earlier words, then lower-ranked senses win ties.
          if (c < best_cost) {
            best_cost = c;
            best_word = w;
            best_sense = s;
          }
        }
      }
    }
    attached[best_word] = true;
    tree.sense_of[best_word] = best_sense;
    tree.attach_cost[best_word] = best_cost;
    tree.total += best_cost;
    tree.order.push_back(best_word);
  }
  return tree;
}

}  // namespace

SenseAssignment DisambiguateSeeds(const std::vector<std::string>& seeds, const Lexicon& lexicon) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  for (const auto& seed : seeds) {
    std::string w = NormalizeTerm(seed);
    if (!w.empty() && seen.insert(w).second) words.push_back(w);
  }
  if (words.empty()) throw ConfigError("no seed words");

  // Global sense numbering so the distance table is computed once.
  std::vector<const Synset*> all_senses;
  std::vector<std::vector<size_t>> sense_ids(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    std::vector<const Synset*> senses = lexicon.Senses(words[i], 'n');
    if (senses.empty()) throw UnknownSeedError(words[i]);
    for (const Synset* s : senses) {
      sense_ids[i].push_back(all_senses.size());
      all_senses.push_back(s);
    }
  }
  std::vector<std::vector<double>> distance(all_senses.size(),
                                            std::vector<double>(all_senses.size()));
  for (size_t a = 0; a < all_senses.size(); ++a) {
    for (size_t b = a; b < all_senses.size(); ++b) {
      double d = SenseDistance(lexicon, *all_senses[a], *all_senses[b]);
      distance[a][b] = distance[b][a] = d;
    }
  }

  size_t start = 0;
  for (size_t i = 1; i < words.size(); ++i) {
    if (sense_ids[i].size() < sense_ids[start].size()) start = i;
  }

  Tree best;
  bool have_best = false;
  for (size_t s = 0; s < sense_ids[start].size(); ++s) {
    Tree tree = GrowTree(sense_ids, start, s, distance);
    if (!have_best || tree.total < best.total) {
      best = std::move(tree);
      have_best = true;
    }
  }

  SenseAssignment out;
  out.start_word = words[start];
  out.total_cost = best.total;
  for (size_t i : best.order) out.attach_order.push_back(words[i]);
  for (size_t i = 0; i < words.size(); ++i) {
    out.choices[words[i]] = {all_senses[sense_ids[i][best.sense_of[i]]]->id, best.attach_cost[i]};
  }
  return out;
}

WordSenseProfile BuildWsp(const Synset& sense, const Lexicon& lexicon,
                          const StopwordSet& stopwords) {
  WordSenseProfile profile{sense.id, {}};
  std::unordered_set<std::string> seen;
  for (WspSource source :
       {WspSource::kSynonyms, WspSource::kGlossWords, WspSource::kHypernymsHyponyms,
        WspSource::kMeronymsHolonyms, WspSource::kHyponymGlossWords}) {
    for (auto& w : WspNeighbors(lexicon, sense, source, stopwords)) {
      if (!stopwords.contains(w) && seen.insert(w).second) profile.words.push_back(w);
    }
  }
  return profile;
}

EdgeSense DisambiguateEdge(std::string_view context, std::string_view ambiguous,
                           const Lexicon& lexicon, const RelatednessProvider& provider,
                           const StopwordSet& stopwords) {
  std::vector<const Synset*> senses = lexicon.Senses(ambiguous, 'n');
  if (senses.empty()) throw UnknownTermError(std::string(ambiguous));
  EdgeSense best{senses.front()->id, -1.0};
  for (const Synset* sense : senses) {
    WordSenseProfile profile = BuildWsp(*sense, lexicon, stopwords);
    double score = 0.0;
    for (const auto& w : profile.words) score += provider.Score(context, w);
    if (score > best.score) best = {sense->id, score};
  }
  return best;
}

}  // namespace sitnet
