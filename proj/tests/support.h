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

#ifndef SITNET_TESTS_SUPPORT_H_
#define SITNET_TESTS_SUPPORT_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sitnet/edges.h"
#include "sitnet/lexicon.h"
#include "sitnet/relatedness.h"
#include "sitnet/text.h"

namespace sitnet::testing {

inline std::filesystem::path SourceDir() { return SITNET_SOURCE_DIR; }
inline std::filesystem::path DataDir() { return SourceDir() / "data"; }

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Bundled fixture resources, loaded once per test binary.
inline const Lexicon& FixtureLexicon() {
  static const Lexicon lexicon = Lexicon::Load(DataDir() / "lexicon");
  return lexicon;
}

inline const StopwordSet& FixtureStopwords() {
  static const StopwordSet stopwords = [] {
    std::ifstream in(DataDir() / "stopwords.txt");
    return ReadStopwords(in);
  }();
  return stopwords;
}

inline const CorpusFrequencies& FixtureCorpus() {
  static const CorpusFrequencies freq = [] {
    std::ifstream in(DataDir() / "corpus_freq.tsv");
    return CorpusFrequencies::Read(in);
  }();
  return freq;
}

inline const EdgeStore& FixtureEdges() {
  static const EdgeStore store = [] {
    std::ifstream in(DataDir() / "edges.tsv");
    return FilterMultiword(EdgeStore::Ingest(in), FixtureLexicon());
  }();
  return store;
}

inline const std::vector<EsaDocument>& FixtureEsaDocuments() {
  static const std::vector<EsaDocument> docs = [] {
    std::ifstream in(DataDir() / "esa_corpus.tsv");
    return EsaIndex::ReadCorpus(in);
  }();
  return docs;
}

inline const EsaIndex& FixtureEsa() {
  static const EsaIndex index =
      EsaIndex::Build(FixtureEsaDocuments(), EsaWeighting::kRawCount, FixtureStopwords());
  return index;
}

inline const EsaProvider& FixtureProvider() {
  static const EsaProvider provider(FixtureEsa(), FixtureStopwords());
  return provider;
}

// Synset id of the first sense of `word` whose gloss contains `needle`.
inline SynsetId SenseWithGloss(std::string_view word, std::string_view needle) {
  for (const Synset* s : FixtureLexicon().Senses(word)) {
    if (s->gloss.find(needle) != std::string::npos) return s->id;
  }
  return {};
}

}  // namespace sitnet::testing

#endif  // SITNET_TESTS_SUPPORT_H_
