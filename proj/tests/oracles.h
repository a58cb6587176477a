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

// Independent reference implementations shared by the unit and acceptance
// tests. None of them calls the code path it checks.

#ifndef SITNET_TESTS_ORACLES_H_
#define SITNET_TESTS_ORACLES_H_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sitnet/bln.h"
#include "sitnet/disambiguation.h"
#include "sitnet/error.h"
#include "sitnet/netgen.h"
#include "sitnet/pipeline.h"
#include "sitnet/relatedness.h"
#include "support.h"

namespace sitnet::testing {

// Word sense disambiguation.

inline double OracleDistance(const Synset& a, const Synset& b) {
  try {
    return 1.0 - WupSimilarity(FixtureLexicon(), a, b);
  } catch (const SimilarityUndefined&) {
    return 1.0;
  }
}

inline std::vector<std::vector<std::string>> SmallSeedSets() {
  std::vector<std::vector<std::string>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(testing::DataDir() / "seedsets")) {
    files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto seeds = ReadSeedsFile(f);
    if (seeds.size() <= 5) out.push_back(seeds);
  }
  return out;
}

struct OracleResult {
  std::vector<size_t> senses;
  double total = std::numeric_limits<double>::infinity();
};

// Straight transcription of the growth rule, tried for every start sense.
inline OracleResult OracleDisambiguate(const std::vector<std::string>& words) {
  const Lexicon& lex = FixtureLexicon();
  std::vector<std::vector<const Synset*>> senses;
  for (const auto& w : words) senses.push_back(lex.Senses(w));
  size_t start = 0;
  for (size_t i = 0; i < words.size(); ++i) {
    if (senses[i].size() < senses[start].size()) start = i;
  }
  OracleResult best;
  for (size_t s0 = 0; s0 < senses[start].size(); ++s0) {
    std::vector<int> fixed(words.size(), -1);
    fixed[start] = static_cast<int>(s0);
    double total = 0;
    for (size_t step = 1; step < words.size(); ++step) {
      double bc = std::numeric_limits<double>::infinity();
      size_t bw = 0, bs = 0;
      for (size_t w = 0; w < words.size(); ++w) {
        if (fixed[w] >= 0) continue;
        for (size_t s = 0; s < senses[w].size(); ++s) {
          for (size_t u = 0; u < words.size(); ++u) {
            if (fixed[u] < 0) continue;
            double c = OracleDistance(*senses[w][s], *senses[u][fixed[u]]);
            if (c < bc) {
              bc = c;
              bw = w;
              bs = s;
            }
          }
        }
      }
      fixed[bw] = static_cast<int>(bs);
      total += bc;
    }
    if (total < best.total) {
      best.total = total;
      best.senses.assign(fixed.begin(), fixed.end());
    }
  }
  return best;
}

// Hierarchy compression.

// Independent rule engine over plain maps: id -> parent ids.
struct RefHierarchy {
  std::map<std::string, std::set<std::string>> parents;
  std::map<std::string, std::string> term;
  std::set<std::string> seeds;

  std::vector<std::string> Children(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& [c, ps] : parents) {
      if (ps.contains(id)) out.push_back(c);
    }
    return out;
  }
  void Delete(const std::string& id) {
    std::set<std::string> ps = parents.at(id);
    std::vector<std::string> cs = Children(id);
    parents.erase(id);
    term.erase(id);
    for (const auto& c : cs) {
      parents[c].erase(id);
      parents[c].insert(ps.begin(), ps.end());
    }
  }
};

inline RefHierarchy ToRef(const ConceptGraph& g) {
  RefHierarchy h;
  for (const auto& [id, n] : g.nodes()) {
    if (n.kind != NodeKind::kConcept) continue;
    h.parents[id];
    h.term[id] = n.term;
    if (n.is_seed) h.seeds.insert(id);
  }
  for (const auto& e : g.Edges()) {
    if (e.relation == Relation::kIsA) h.parents[e.src].insert(e.dst);
  }
  return h;
}

inline bool RefTokensContained(const std::string& child, const std::string& parent) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '_')) {
      if (!tok.empty()) out.push_back(tok);
    }
    return out;
  };
  auto c = split(child), p = split(parent);
  if (c.empty()) return false;
  return std::search(p.begin(), p.end(), c.begin(), c.end()) != p.end();
}

inline RefHierarchy RefCompress(RefHierarchy h, const CorpusFrequencies& freq,
                                const CompressOptions& opt) {
  auto top_level = [&](const std::string& id) {
    return opt.blocklist.contains(h.term.at(id)) ||
           InformationContent(h.term.at(id), freq) < opt.ic_threshold;
  };
  auto strands = [&](const std::string& id) {
    if (!h.parents.at(id).empty()) return false;
    for (const auto& c : h.Children(id)) {
      if (h.seeds.contains(c) && h.parents.at(c).size() == 1) return true;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    // Rule 1 to its own fixpoint.
    for (bool again = true; again;) {
      again = false;
      std::vector<std::string> ids;
      for (const auto& [id, ps] : h.parents) ids.push_back(id);
      for (const auto& id : ids) {
        if (!h.parents.contains(id) || h.seeds.contains(id)) continue;
        if (!top_level(id) || strands(id)) continue;
        h.Delete(id);
        again = changed = true;
      }
    }
    // Rule 2, leaves first by height measured before the pass.
    std::map<std::string, int> height;
    std::function<int(const std::string&)> ht = [&](const std::string& id) {
      auto it = height.find(id);
      if (it != height.end()) return it->second;
      int v = 0;
      for (const auto& c : h.Children(id)) v = std::max(v, ht(c) + 1);
      return height[id] = v;
    };
    std::vector<std::pair<int, std::string>> order;
    for (const auto& [id, ps] : h.parents) order.push_back({ht(id), id});
    std::sort(order.begin(), order.end());
    for (const auto& [hgt, id] : order) {
      if (!h.parents.contains(id) || h.seeds.contains(id) || h.parents.at(id).empty()) continue;
      if (static_cast<int>(h.Children(id).size()) >= opt.min_children) continue;
      h.Delete(id);
      changed = true;
    }
    // Rule 3 over a snapshot of (child, parent) links.
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& [c, ps] : h.parents) {
      for (const auto& p : ps) links.push_back({c, p});
    }
    for (const auto& [c, p] : links) {
      if (!h.parents.contains(c) || !h.parents.at(c).contains(p)) continue;
      if (h.seeds.contains(c) || !RefTokensContained(h.term.at(c), h.term.at(p))) continue;
      h.Delete(c);
      changed = true;
    }
  }
  return h;
}

// Random DAG whose parents always have a smaller index.
inline ConceptGraph RandomHierarchy(uint64_t seed, CorpusFrequencies& freq) {
  static const std::vector<std::string> vocab = {"entity",       "object",
                                                 "utensil",      "cooking_utensil",
                                                 "pan",          "tool",
                                                 "hand_tool",    "device",
                                                 "food",         "seasoning",
                                                 "garlic",       "kitchen",
                                                 "appliance",    "home_appliance",
                                                 "cloth",        "rag",
                                                 "container",    "vessel",
                                                 "metal_vessel", "brush",
                                                 "implement",    "cleaning_implement"};
  std::mt19937_64 rng(seed);
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  freq = {};
  freq.total = 100000;
  for (const auto& w : vocab) {
    freq.counts[w] = 1 + pick(3) * 900 + pick(50);  // spans IC above and below 5
  }
  ConceptGraph g;
  size_t n = 6 + pick(18);
  std::vector<std::string> ids;
  for (size_t i = 0; i < n; ++i) {
    std::string term = vocab[pick(vocab.size())];
    std::string id = term + "_" + std::to_string(i);
    bool seed = i >= n / 2 && pick(3) == 0;
    g.AddNode({id, term, NodeKind::kConcept, std::nullopt, seed});
    ids.push_back(id);
    if (i == 0) continue;
    size_t np = 1 + pick(2);
    for (size_t k = 0; k < np; ++k) g.AddEdge(id, Relation::kIsA, ids[pick(i)], 1.0);
  }
  // At least one seed.
  ConceptNode last = *g.Find(ids.back());
  last.is_seed = true;
  g.AddNode(last);
  return g;
}

// ESA relatedness.

// Independent tokenizer for the recount oracle.
inline std::vector<std::string> OracleTokens(const std::string& text, const StopwordSet& stop) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.size() >= 2 && !stop.contains(cur)) out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// word -> dense vector over documents.
inline std::map<std::string, std::vector<double>> DenseCounts() {
  const auto& docs = FixtureEsaDocuments();
  std::map<std::string, std::vector<double>> dense;
  for (size_t d = 0; d < docs.size(); ++d) {
    for (const auto& w : OracleTokens(docs[d].text, FixtureStopwords())) {
      auto& v = dense[w];
      v.resize(docs.size(), 0.0);
      v[d] += 1.0;
    }
  }
  return dense;
}

inline double DenseCosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / std::sqrt(na * nb);
}

// Ground network inference.

inline GroundVariable Var(const std::string& name, std::vector<size_t> parents,
                          std::vector<double> cpf) {
  GroundVariable v;
  v.name = name;
  v.atom = ParseAtom(name);
  v.parents = std::move(parents);
  v.cpf = std::move(cpf);
  return v;
}

// Random DAG over n variables; each node draws up to 3 earlier parents.
inline GroundNetwork RandomNet(size_t n, std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  GroundNetwork net;
  for (size_t i = 0; i < n; ++i) {
    std::vector<size_t> parents;
    for (size_t j = 0; j < i; ++j) {
      if (parents.size() < 3 && rng() % 3 == 0) parents.push_back(j);
    }
    std::vector<double> cpf(size_t{1} << parents.size());
    for (double& c : cpf) c = u(rng);
    net.Add(Var("IsA(o,v" + std::to_string(i) + ")", parents, cpf));
  }
  net.Finalize();
  return net;
}

// P(query | evidence) from the explicit joint table over every variable.
inline double JointTable(const GroundNetwork& net, size_t query,
                         const std::map<size_t, bool>& evidence) {
  size_t n = net.size();
  double num = 0, den = 0;
  for (uint64_t world = 0; world < (uint64_t{1} << n); ++world) {
    auto value = [&](size_t i) { return ((world >> i) & 1) != 0; };
    bool consistent = true;
    for (const auto& [i, b] : evidence) consistent = consistent && value(i) == b;
    if (!consistent) continue;
    double p = 1.0;
    for (size_t i = 0; i < n; ++i) {
      const GroundVariable& v = net.variable(i);
      size_t row = 0;
      for (size_t parent : v.parents) row = (row << 1) | (value(parent) ? 1 : 0);
      p *= value(i) ? v.cpf[row] : 1.0 - v.cpf[row];
    }
    den += p;
    if (value(query)) num += p;
  }
  return num / den;
}

}  // namespace sitnet::testing

#endif  // SITNET_TESTS_ORACLES_H_
