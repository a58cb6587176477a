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

#ifndef SITNET_LEXICON_H_
#define SITNET_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sitnet/text.h"

namespace sitnet {

// Synset identifiers have the form "<offset>-<pos>", e.g. "03880531-n".
// Satellite adjectives share the 'a' tag.
using SynsetId = std::string;

struct Synset {
  SynsetId id;
  char pos = 'n';
  std::vector<std::string> lemmas;
  std::string gloss;
  std::vector<SynsetId> hypernyms;
  std::vector<SynsetId> hyponyms;
  std::vector<SynsetId> meronyms;
  std::vector<SynsetId> holonyms;
};

// An immutable, indexed WordNet-style lexicon.
//
// The parser accepts the WordNet 3.x database layout: `index.<pos>` lines
// list a lemma and its synset offsets in sense-rank order, `data.<pos>` lines
// carry the synset itself. Only hypernym (@, @i), hyponym (~, ~i), meronym
// (%p %m %s) and holonym (#p #m #s) pointers are kept. Inverse links are
// rebuilt from whichever direction the source provides.
class Lexicon {
 public:
  Lexicon() = default;

  // Parses one index/data stream pair. Either stream may hold entries for
  // several parts of speech.
  static Lexicon Parse(std::istream& index, std::istream& data);

  // Loads every index.<pos>/data.<pos> pair present in `dir`.
  static Lexicon Load(const std::filesystem::path& dir);

  // Writes the lexicon back in the database layout. Parsing the output
  // yields an identical lexicon.
  void Write(std::ostream& index, std::ostream& data) const;

  const Synset* Find(std::string_view id) const;
  const Synset& Get(std::string_view id) const;

  // Senses of `word` in rank order. Unknown words yield an empty list.
  std::vector<const Synset*> Senses(std::string_view word, char pos = 'n') const;
  const std::vector<SynsetId>& SenseIds(std::string_view word, char pos = 'n') const;

  // True if `term` is a lemma of any synset, for any part of speech.
  bool HasLemma(std::string_view term) const;

  // Root depth is 1; with several hypernym paths the longest one counts.
  int Depth(std::string_view id) const;

  // `id` and all of its hypernym ancestors, sorted by id.
  std::vector<SynsetId> Ancestors(std::string_view id) const;

  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }
  const std::map<std::pair<std::string, char>, std::vector<SynsetId>>& lemma_index() const {
    return lemma_index_;
  }
  const std::vector<SynsetId>& roots() const { return roots_; }
  size_t size() const { return synsets_.size(); }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.synsets_ == b.synsets_ && a.lemma_index_ == b.lemma_index_ && a.roots_ == b.roots_;
  }

 private:
  friend class LexiconBuilder;

  std::map<SynsetId, Synset> synsets_;
  std::map<std::pair<std::string, char>, std::vector<SynsetId>> lemma_index_;
  std::unordered_set<std::string> all_lemmas_;
  std::vector<SynsetId> roots_;
  std::unordered_map<SynsetId, int> depth_;
};

bool operator==(const Synset& a, const Synset& b);

// Wu-Palmer similarity: 2 * depth(lcs) / (depth(a) + depth(b)), where the
// least common subsumer is the deepest shared ancestor. Throws
// SimilarityUndefined when the synsets share no ancestor.
double WupSimilarity(const Lexicon& lexicon, const Synset& a, const Synset& b);

struct CorpusFrequencies {
  std::unordered_map<std::string, uint64_t> counts;
  uint64_t total = 0;

  // Lines of `word<TAB>count`. Repeated words are summed.
  static CorpusFrequencies Read(std::istream& in);
};

// -ln(count / total); words missing from the corpus get -ln(1 / (total + 1)).
double InformationContent(std::string_view word, const CorpusFrequencies& freq);

// The five context sources of a word sense profile, in profile order.
enum class WspSource {
  kSynonyms,
  kGlossWords,
  kHypernymsHyponyms,
  kMeronymsHolonyms,
  kHyponymGlossWords,
};

std::vector<std::string> WspNeighbors(const Lexicon& lexicon, const Synset& sense, WspSource source,
                                      const StopwordSet& stopwords);

}  // namespace sitnet

#endif  // SITNET_LEXICON_H_
