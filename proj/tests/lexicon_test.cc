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

#include "sitnet/lexicon.h"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sitnet/error.h"
#include "support.h"

namespace sitnet {
namespace {

using testing::DataDir;
using testing::FixtureLexicon;

// Minimal independent reading of the data file: offset -> hypernym offsets.
struct ScannedSynset {
  std::vector<std::string> lemmas;
  std::vector<std::string> hypernyms;
  size_t hyponym_pointers = 0;
  std::vector<std::string> meronyms;
  std::vector<std::string> holonyms;
};

std::map<std::string, ScannedSynset> ScanDataFile() {
  std::map<std::string, ScannedSynset> out;
  std::istringstream in(testing::ReadFile(DataDir() / "lexicon" / "data.noun"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ') continue;
    std::istringstream fields(line.substr(0, line.find('|')));
    std::string offset, lex, pos, wcnt_hex;
    fields >> offset >> lex >> pos >> wcnt_hex;
    ScannedSynset s;
    int wcnt = std::stoi(wcnt_hex, nullptr, 16);
    for (int i = 0; i < wcnt; ++i) {
      std::string word, lexid;
      fields >> word >> lexid;
      s.lemmas.push_back(word);
    }
    int pcnt;
    fields >> pcnt;
    for (int i = 0; i < pcnt; ++i) {
      std::string sym, target, tpos, st;
      fields >> sym >> target >> tpos >> st;
      if (sym == "@" || sym == "@i") s.hypernyms.push_back(target + "-n");
      if (sym == "~" || sym == "~i") ++s.hyponym_pointers;
      if (sym[0] == '%') s.meronyms.push_back(target + "-n");
      if (sym[0] == '#') s.holonyms.push_back(target + "-n");
    }
    out[offset + "-n"] = s;
  }
  return out;
}

// Longest root path, counted in nodes.
int OracleDepth(const std::map<std::string, ScannedSynset>& scan, const std::string& id) {
  int best = 0;
  for (const auto& h : scan.at(id).hypernyms) best = std::max(best, OracleDepth(scan, h));
  return best + 1;
}

void OracleAncestors(const std::map<std::string, ScannedSynset>& scan, const std::string& id,
                     std::set<std::string>& out) {
  if (!out.insert(id).second) return;
  for (const auto& h : scan.at(id).hypernyms) OracleAncestors(scan, h, out);
}

// Tries every shared ancestor as the subsumer and keeps the best ratio.
double OracleWup(const std::map<std::string, ScannedSynset>& scan, const std::string& a,
                 const std::string& b) {
  std::set<std::string> aa, bb;
  OracleAncestors(scan, a, aa);
  OracleAncestors(scan, b, bb);
  double best = -1.0;
  for (const auto& c : aa) {
    if (!bb.contains(c)) continue;
    double v = 2.0 * OracleDepth(scan, c) / (OracleDepth(scan, a) + OracleDepth(scan, b));
    best = std::max(best, v);
  }
  return best;
}

Lexicon ParseText(const std::string& index, const std::string& data) {
  std::istringstream i(index), d(data);
  return Lexicon::Parse(i, d);
}

// root(1) <- mid(2) <- leaf(3), plus an isolated synset in another tree.
const char* kChainIndex =
    "leaf n 1 0 1 0 00000300\n"
    "mid n 1 0 1 0 00000200\n"
    "root n 1 0 1 0 00000100\n"
    "island n 1 0 1 0 00000400\n";
const char* kChainData =
    "00000100 03 n 01 root 0 000 | the top\n"
    "00000200 03 n 01 mid 0 001 @ 00000100 n 0000 | the middle\n"
    "00000300 03 n 01 leaf 0 001 @ 00000200 n 0000 | the bottom\n"
    "00000400 03 n 01 island 0 000 | alone\n";

TEST_CASE("pan has four noun senses including a cooking utensil and a deity") {
  const Lexicon& lex = FixtureLexicon();
  auto senses = lex.Senses("pan", 'n');
  REQUIRE(senses.size() == 4);
  CHECK(lex.lemma_index().at({"pan", 'n'}).size() == 4);
  bool cooking = false, deity = false;
  for (const Synset* s : senses) {
    if (s->gloss == "cooking utensil consisting of wide metal vessel") cooking = true;
    if (s->gloss.find("god") != std::string::npos) deity = true;
  }
  CHECK(cooking);
  CHECK(deity);
}

TEST_CASE("empty streams give an empty lexicon") {
  Lexicon lex = ParseText("", "");
  CHECK(lex.size() == 0);
  CHECK(lex.roots().empty());
}

TEST_CASE("unknown word has no senses") { CHECK(FixtureLexicon().Senses("zzz").empty()); }

TEST_CASE("fixture counts match a text scan of the data file") {
  auto scan = ScanDataFile();
  const Lexicon& lex = FixtureLexicon();
  CHECK(lex.size() == scan.size());
  size_t roots = 0, hypernym_links = 0, hyponym_pointers = 0;
  std::set<std::pair<std::string, std::string>> part_links;  // (whole, part)
  for (const auto& [id, s] : scan) {
    if (s.hypernyms.empty()) ++roots;
    hypernym_links += s.hypernyms.size();
    hyponym_pointers += s.hyponym_pointers;
    for (const auto& m : s.meronyms) part_links.insert({id, m});
    for (const auto& h : s.holonyms) part_links.insert({h, id});
  }
  CHECK(lex.roots().size() == roots);
  size_t lex_hyper = 0, lex_hypo = 0, lex_mero = 0, lex_holo = 0;
  for (const auto& [id, s] : lex.synsets()) {
    lex_hyper += s.hypernyms.size();
    lex_hypo += s.hyponyms.size();
    lex_mero += s.meronyms.size();
    lex_holo += s.holonyms.size();
  }
  CHECK(lex_hyper == hypernym_links);
  CHECK(lex_hypo == hyponym_pointers);
  CHECK(lex_mero == part_links.size());
  CHECK(lex_holo == part_links.size());
}

TEST_CASE("sense list lengths match the index file") {
  std::istringstream in(testing::ReadFile(DataDir() / "lexicon" / "index.noun"));
  std::string line;
  size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ') continue;
    std::istringstream f(line);
    std::string lemma, pos;
    size_t count;
    f >> lemma >> pos >> count;
    CHECK_MESSAGE(FixtureLexicon().Senses(lemma).size() == count, lemma);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("inverse links are rebuilt when the source lists one direction") {
  Lexicon lex = ParseText(kChainIndex, kChainData);
  CHECK(lex.Get("00000100-n").hyponyms == std::vector<SynsetId>{"00000200-n"});
  CHECK(lex.Get("00000200-n").hyponyms == std::vector<SynsetId>{"00000300-n"});
  CHECK(lex.roots().size() == 2);
}

TEST_CASE("malformed data line reports its line number") {
  try {
    ParseText("", "00000100 03 n 01 root 0 000 | ok\n00000200 03 n zz\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("hypernym cycle is reported with its members") {
  const char* data =
      "00000100 03 n 01 a 0 001 @ 00000200 n 0000 | a\n"
      "00000200 03 n 01 b 0 001 @ 00000100 n 0000 | b\n";
  CHECK_THROWS_AS(ParseText("", data), CycleError);
}

TEST_CASE("wup of a synset with itself is one") {
  const Lexicon& lex = FixtureLexicon();
  for (const auto& [id, s] : lex.synsets()) CHECK(WupSimilarity(lex, s, s) == 1.0);
}

TEST_CASE("wup of child and parent at depths 3 and 2 is 0.8") {
  Lexicon lex = ParseText(kChainIndex, kChainData);
  CHECK(lex.Depth("00000300-n") == 3);
  CHECK(lex.Depth("00000200-n") == 2);
  CHECK(WupSimilarity(lex, lex.Get("00000300-n"), lex.Get("00000200-n")) ==
        doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("wup is undefined across disjoint trees") {
  Lexicon lex = ParseText(kChainIndex, kChainData);
  CHECK_THROWS_AS(WupSimilarity(lex, lex.Get("00000300-n"), lex.Get("00000400-n")),
                  SimilarityUndefined);
}

TEST_CASE("wup matches the brute-force ancestor oracle on all fixture pairs") {
  auto scan = ScanDataFile();
  const Lexicon& lex = FixtureLexicon();
  for (const auto& [a, sa] : lex.synsets()) {
    CHECK(lex.Depth(a) == OracleDepth(scan, a));
    for (const auto& [b, sb] : lex.synsets()) {
      double oracle = OracleWup(scan, a, b);
      if (oracle < 0) {
        CHECK_THROWS_AS(WupSimilarity(lex, sa, sb), SimilarityUndefined);
      } else {
        REQUIRE(WupSimilarity(lex, sa, sb) == doctest::Approx(oracle).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("wup is symmetric, bounded and reaches one only at equal depths") {
  const Lexicon& lex = FixtureLexicon();
  for (const auto& [a, sa] : lex.synsets()) {
    for (const auto& [b, sb] : lex.synsets()) {
      double ab, ba;
      try {
        ab = WupSimilarity(lex, sa, sb);
        ba = WupSimilarity(lex, sb, sa);
      } catch (const SimilarityUndefined&) {
        continue;
      }
      REQUIRE(ab == ba);
      REQUIRE(ab > 0.0);
      REQUIRE(ab <= 1.0);
      if (ab == 1.0) REQUIRE(lex.Depth(a) == lex.Depth(b));
    }
  }
}

TEST_CASE("wup against ancestors does not grow as the ancestor gets shallower") {
  const Lexicon& lex = FixtureLexicon();
  for (const auto& [id, s] : lex.synsets()) {
    // Walk the first-hypernym path upwards.
    double previous = 1.0;
    const Synset* cur = &s;
    while (!cur->hypernyms.empty()) {
      cur = &lex.Get(cur->hypernyms.front());
      double v = WupSimilarity(lex, s, *cur);
      REQUIRE(v <= previous + 1e-15);
      previous = v;
    }
  }
}

TEST_CASE("information content follows -ln(c/N)") {
  CorpusFrequencies freq;
  freq.counts = {{"pan", 100}, {"the", 9900}};
  freq.total = 10000;
  CHECK(InformationContent("pan", freq) == doctest::Approx(-std::log(0.01)));
  CHECK(InformationContent("pan", freq) < 5.0);
  CorpusFrequencies one;
  one.counts = {{"only", 7}};
  one.total = 7;
  CHECK(InformationContent("only", one) == 0.0);
  CHECK(InformationContent("unseen", freq) == doctest::Approx(-std::log(1.0 / 10001)));
}

TEST_CASE("information content of every fixture word matches arithmetic") {
  std::istringstream in(testing::ReadFile(DataDir() / "corpus_freq.tsv"));
  std::map<std::string, double> counts;
  double total = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    double c = std::stod(line.substr(tab + 1));
    counts[line.substr(0, tab)] += c;
    total += c;
  }
  const CorpusFrequencies& freq = testing::FixtureCorpus();
  CHECK(static_cast<double>(freq.total) == total);
  for (const auto& [w, c] : counts) {
    REQUIRE(InformationContent(w, freq) == doctest::Approx(-std::log(c / total)).epsilon(1e-12));
  }
}

TEST_CASE("information content strictly decreases with count") {
  CorpusFrequencies freq;
  freq.total = 1000;
  double previous = INFINITY;
  for (uint64_t c = 1; c <= 1000; ++c) {
    freq.counts["w"] = c;
    double ic = InformationContent("w", freq);
    REQUIRE(ic < previous);
    previous = ic;
  }
}

TEST_CASE("corpus reader sums repeated words and rejects bad counts") {
  std::istringstream in("a\t3\nb\t2\na\t1\n");
  CorpusFrequencies freq = CorpusFrequencies::Read(in);
  CHECK(freq.counts.at("a") == 4);
  CHECK(freq.total == 6);
  std::istringstream bad("a\tx\n");
  CHECK_THROWS_AS(CorpusFrequencies::Read(bad), ParseError);
}

TEST_CASE("synonym source of the cooking pan lists its lemmas") {
  const Lexicon& lex = FixtureLexicon();
  const Synset& pan = lex.Get(testing::SenseWithGloss("pan", "cooking utensil"));
  CHECK(WspNeighbors(lex, pan, WspSource::kSynonyms, {}) ==
        std::vector<std::string>{"pan", "cooking_pan"});
}

TEST_CASE("gloss source drops stopwords") {
  const Lexicon& lex = FixtureLexicon();
  const Synset& pan = lex.Get(testing::SenseWithGloss("pan", "cooking utensil"));
  CHECK(WspNeighbors(lex, pan, WspSource::kGlossWords, {"of"}) ==
        std::vector<std::string>{"cooking", "utensil", "consisting", "wide", "metal", "vessel"});
}

TEST_CASE("link sources are empty for a synset without links") {
  Lexicon lex = ParseText(kChainIndex, kChainData);
  const Synset& island = lex.Get("00000400-n");
  CHECK(WspNeighbors(lex, island, WspSource::kHypernymsHyponyms, {}).empty());
  CHECK(WspNeighbors(lex, island, WspSource::kMeronymsHolonyms, {}).empty());
  CHECK(WspNeighbors(lex, island, WspSource::kHyponymGlossWords, {}).empty());
}

TEST_CASE("write then parse round-trips the fixture lexicon") {
  std::ostringstream index, data;
  FixtureLexicon().Write(index, data);
  Lexicon again = ParseText(index.str(), data.str());
  CHECK(again == FixtureLexicon());
}

TEST_CASE("lemma lookup ignores case and spaces") {
  const Lexicon& lex = FixtureLexicon();
  CHECK(lex.Senses("Frying Pan").size() == lex.Senses("frying_pan").size());
  CHECK(lex.HasLemma("paper_towel"));
}

}  // namespace
}  // namespace sitnet
