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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "sitnet/error.h"
#include "sitnet/pipeline.h"
#include "support.h"

namespace sitnet {
namespace {

using namespace sitnet::testing;

// Minimum spanning tree cost over words with every sense fixed.
double MstCost(const std::vector<const Synset*>& chosen) {
  size_t n = chosen.size();
  std::vector<bool> in(n, false);
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  key[0] = 0;
  double total = 0;
  for (size_t step = 0; step < n; ++step) {
    size_t u = n;
    for (size_t v = 0; v < n; ++v) {
      if (!in[v] && (u == n || key[v] < key[u])) u = v;
    }
    in[u] = true;
    total += key[u];
    for (size_t v = 0; v < n; ++v) {
      if (!in[v]) key[v] = std::min(key[v], OracleDistance(*chosen[u], *chosen[v]));
    }
  }
  return total;
}

TEST_CASE("identical single-sense lists cost zero at (0, 0)") {
  const Synset* garlic = FixtureLexicon().Senses("garlic").front();
  std::vector<const Synset*> a{garlic}, b{garlic};
  PairCost c = PairwiseCost(FixtureLexicon(), a, b);
  CHECK(c.cost == 0.0);
  CHECK(c.k == 0);
  CHECK(c.l == 0);
}

TEST_CASE("senses in disjoint hierarchies cost one") {
  std::istringstream index("a n 1 0 1 0 00000100\nb n 1 0 1 0 00000200\n");
  std::istringstream data("00000100 03 n 01 a 0 000 | x\n00000200 03 n 01 b 0 000 | y\n");
  Lexicon lex = Lexicon::Parse(index, data);
  std::vector<const Synset*> a = lex.Senses("a"), b = lex.Senses("b");
  CHECK(PairwiseCost(lex, a, b).cost == 1.0);
}

TEST_CASE("pairwise cost equals a double loop over sense pairs") {
  const Lexicon& lex = FixtureLexicon();
  std::vector<std::string> words = {"pan",   "stove", "iron",  "washer", "sponge", "rag",   "soap",
                                    "plate", "cup",   "knife", "bowl",   "basket", "vacuum"};
  for (const auto& a : words) {
    for (const auto& b : words) {
      auto sa = lex.Senses(a), sb = lex.Senses(b);
      double best = 2.0;
      size_t bk = 0, bl = 0;
      for (size_t k = 0; k < sa.size(); ++k) {
        for (size_t l = 0; l < sb.size(); ++l) {
          double c = OracleDistance(*sa[k], *sb[l]);
          if (c < best) {
            best = c;
            bk = k;
            bl = l;
          }
        }
      }
      PairCost got = PairwiseCost(lex, sa, sb);
      CHECK(got.cost == best);
      CHECK(got.k == bk);
      CHECK(got.l == bl);
    }
  }
}

TEST_CASE("a single seed with one sense keeps it at zero cost") {
  SenseAssignment a = DisambiguateSeeds({"garlic"}, FixtureLexicon());
  CHECK(a.choices.at("garlic").sense == FixtureLexicon().Senses("garlic").front()->id);
  CHECK(a.total_cost == 0.0);
  CHECK(a.start_word == "garlic");
}

TEST_CASE("pan resolves to the cooking utensil next to stove and garlic") {
  SenseAssignment a = DisambiguateSeeds({"pan", "stove", "garlic"}, FixtureLexicon());
  CHECK(a.choices.at("pan").sense == testing::SenseWithGloss("pan", "cooking utensil"));
}

TEST_CASE("unknown seeds are reported by name") {
  try {
    DisambiguateSeeds({"pan", "qwertyuiop"}, FixtureLexicon());
    FAIL("expected UnknownSeedError");
  } catch (const UnknownSeedError& e) {
    CHECK(e.word() == "qwertyuiop");
  }
}

TEST_CASE("small seed sets match exhaustive search over start senses") {
  const Lexicon& lex = FixtureLexicon();
  auto sets = SmallSeedSets();
  REQUIRE(sets.size() >= 4);
  for (const auto& seeds : sets) {
    SenseAssignment got = DisambiguateSeeds(seeds, lex);
    OracleResult want = OracleDisambiguate(seeds);
    CHECK(got.total_cost == doctest::Approx(want.total).epsilon(1e-12));
    for (size_t i = 0; i < seeds.size(); ++i) {
      CHECK(got.choices.at(seeds[i]).sense == lex.Senses(seeds[i])[want.senses[i]]->id);
    }
  }
}

TEST_CASE("small seed sets cost no more than any sense combination's spanning tree") {
  const Lexicon& lex = FixtureLexicon();
  for (const auto& seeds : SmallSeedSets()) {
    SenseAssignment got = DisambiguateSeeds(seeds, lex);
    std::vector<std::vector<const Synset*>> senses;
    for (const auto& w : seeds) senses.push_back(lex.Senses(w));
    std::vector<const Synset*> chosen(seeds.size());
    double min_combo = std::numeric_limits<double>::infinity();
    std::function<void(size_t)> visit = [&](size_t i) {
      if (i == seeds.size()) {
        min_combo = std::min(min_combo, MstCost(chosen));
        return;
      }
      for (const Synset* s : senses[i]) {
        chosen[i] = s;
        visit(i + 1);
      }
    };
    visit(0);
    CHECK(got.total_cost <= min_combo + 1e-12);
  }
}

TEST_CASE("assignment invariants hold on every scenario") {
  const Lexicon& lex = FixtureLexicon();
  for (const char* name : {"recipe", "laundry", "cleaning"}) {
    auto seeds = ReadSeedsFile(testing::DataDir() / "scenarios" / name / "seeds.txt");
    SenseAssignment a = DisambiguateSeeds(seeds, lex);
    double sum = 0;
    for (const auto& [word, choice] : a.choices) {
      if (word != a.start_word) sum += choice.cost;
      const auto& lemmas = lex.Get(choice.sense).lemmas;
      CHECK(std::find(lemmas.begin(), lemmas.end(), word) != lemmas.end());
    }
    CHECK(a.total_cost == doctest::Approx(sum).epsilon(1e-12));
    CHECK(a.choices.at(a.start_word).cost == 0.0);
    CHECK(a.attach_order.front() == a.start_word);
    CHECK(a.attach_order.size() == seeds.size());
  }
}

TEST_CASE("disambiguation is deterministic and permutation-stable in cost") {
  const Lexicon& lex = FixtureLexicon();
  auto seeds = ReadSeedsFile(testing::DataDir() / "scenarios" / "recipe" / "seeds.txt");
  SenseAssignment a = DisambiguateSeeds(seeds, lex);
  SenseAssignment b = DisambiguateSeeds(seeds, lex);
  CHECK(a.total_cost == b.total_cost);
  std::ostringstream wa, wb;
  a.Write(wa);
  b.Write(wb);
  CHECK(wa.str() == wb.str());

  for (const auto& small : SmallSeedSets()) {
    // Only meaningful when the start word is unique by sense count.
    std::vector<size_t> counts;
    for (const auto& w : small) counts.push_back(lex.Senses(w).size());
    size_t min = *std::min_element(counts.begin(), counts.end());
    if (std::count(counts.begin(), counts.end(), min) != 1) continue;
    auto perm = small;
    std::reverse(perm.begin(), perm.end());
    SenseAssignment x = DisambiguateSeeds(small, lex), y = DisambiguateSeeds(perm, lex);
    std::multiset<double> cx, cy;
    for (const auto& [w, c] : x.choices) cx.insert(c.cost);
    for (const auto& [w, c] : y.choices) cy.insert(c.cost);
    CHECK(x.total_cost == doctest::Approx(y.total_cost).epsilon(1e-12));
    CHECK(cx == cy);
  }
}

TEST_CASE("assignment text round-trips") {
  SenseAssignment a = DisambiguateSeeds({"pan", "stove", "garlic"}, FixtureLexicon());
  std::stringstream buf;
  a.Write(buf);
  SenseAssignment b = SenseAssignment::Read(buf);
  for (const auto& [w, c] : a.choices) CHECK(b.choices.at(w).sense == c.sense);
}

TEST_CASE("profile of an isolated synset with a stopword gloss is empty") {
  std::istringstream index("thing n 1 0 1 0 00000100\n");
  std::istringstream data("00000100 03 n 01 thing 0 000 | a b\n");
  Lexicon lex = Lexicon::Parse(index, data);
  WordSenseProfile p = BuildWsp(lex.Get("00000100-n"), lex, {"a", "b", "thing"});
  CHECK(p.words.empty());
}

TEST_CASE("cooking pan profile holds its hypernym lemma and a gloss word") {
  const Lexicon& lex = FixtureLexicon();
  WordSenseProfile p =
      BuildWsp(lex.Get(testing::SenseWithGloss("pan", "cooking utensil")), lex, FixtureStopwords());
  CHECK(std::find(p.words.begin(), p.words.end(), "cooking_utensil") != p.words.end());
  CHECK(std::find(p.words.begin(), p.words.end(), "metal") != p.words.end());
}

TEST_CASE("every profile equals the union of its five sources") {
  const Lexicon& lex = FixtureLexicon();
  const StopwordSet& stop = FixtureStopwords();
  for (const auto& [id, s] : lex.synsets()) {
    std::vector<std::string> want;
    std::set<std::string> seen;
    for (WspSource src :
         {WspSource::kSynonyms, WspSource::kGlossWords, WspSource::kHypernymsHyponyms,
          WspSource::kMeronymsHolonyms, WspSource::kHyponymGlossWords}) {
      for (const auto& w : WspNeighbors(lex, s, src, stop)) {
        if (!stop.contains(w) && seen.insert(w).second) want.push_back(w);
      }
    }
    WordSenseProfile p = BuildWsp(s, lex, stop);
    REQUIRE(p.words == want);
    for (const auto& w : p.words) {
      CHECK_FALSE(w.empty());
      CHECK_FALSE(stop.contains(w));
    }
  }
}

TEST_CASE("a single-sense term needs no provider") {
  NullProvider null;
  EdgeSense e = DisambiguateEdge("stove", "garlic", FixtureLexicon(), null, FixtureStopwords());
  CHECK(e.sense == FixtureLexicon().Senses("garlic").front()->id);
}

TEST_CASE("kitchen relatedness picks the cooking pan next to stove") {
  TableProvider table;
  for (const char* w : {"cooking", "utensil", "cooking_utensil", "metal", "vessel", "kitchen",
                        "saucepan", "frying_pan", "wide"}) {
    table.Set("stove", w, 1.0);
  }
  EdgeSense e = DisambiguateEdge("stove", "pan", FixtureLexicon(), table, FixtureStopwords());
  CHECK(e.sense == testing::SenseWithGloss("pan", "cooking utensil"));
}

TEST_CASE("unknown ambiguous term is an error") {
  NullProvider null;
  CHECK_THROWS_AS(DisambiguateEdge("stove", "zzzz", FixtureLexicon(), null, FixtureStopwords()),
                  UnknownTermError);
}

// Multiplies another provider's scores by a constant.
class ScaledProvider : public RelatednessProvider {
 public:
  ScaledProvider(const RelatednessProvider& base, double factor) : base_(base), factor_(factor) {}
  double Score(std::string_view a, std::string_view b) const override {
    return factor_ * base_.Score(a, b);
  }

 private:
  const RelatednessProvider& base_;
  double factor_;
};

TEST_CASE("edge senses equal a naive argmax and survive score scaling") {
  const Lexicon& lex = FixtureLexicon();
  const StopwordSet& stop = FixtureStopwords();
  const EsaProvider& esa = testing::FixtureProvider();
  ScaledProvider scaled(esa, 3.5);
  std::vector<std::string> contexts = {"stove", "kitchen", "laundry", "sock", "broom", "golf"};
  std::vector<std::string> ambiguous;
  for (const auto& [key, ids] : lex.lemma_index()) {
    if (key.second == 'n' && ids.size() > 1) ambiguous.push_back(key.first);
  }
  REQUIRE(ambiguous.size() >= 5);
  for (const auto& c : contexts) {
    for (const auto& d : ambiguous) {
      std::string best;
      double best_score = -1.0;
      for (const Synset* s : lex.Senses(d)) {
        double score = 0;
        for (const auto& w : BuildWsp(*s, lex, stop).words) score += esa.Score(c, w);
        if (score > best_score) {
          best_score = score;
          best = s->id;
        }
      }
      EdgeSense got = DisambiguateEdge(c, d, lex, esa, stop);
      CHECK(got.sense == best);
      CHECK(got.score == doctest::Approx(best_score).epsilon(1e-12));
      double readd = 0;
      for (const auto& w : BuildWsp(lex.Get(got.sense), lex, stop).words) readd += esa.Score(c, w);
      CHECK(got.score == doctest::Approx(readd).epsilon(1e-12));
      CHECK(DisambiguateEdge(c, d, lex, scaled, stop).sense == got.sense);
    }
  }
}

}  // namespace
}  // namespace sitnet
