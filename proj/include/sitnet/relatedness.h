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

#ifndef SITNET_RELATEDNESS_H_
#define SITNET_RELATEDNESS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sitnet/text.h"

namespace sitnet {

// Word relatedness in [0, 1]. Implementations must be symmetric, score a
// known word against itself as 1 and unknown pairs as 0.
class RelatednessProvider {
 public:
  virtual ~RelatednessProvider() = default;
  virtual double Score(std::string_view a, std::string_view b) const = 0;
};

enum class EsaWeighting { kRawCount, kTfidf };

struct EsaDocument {
  std::string title;
  std::string text;
};

// Sorted by concept index, no duplicates, strictly positive weights.
using SparseVector = std::vector<std::pair<uint32_t, double>>;

// Explicit Semantic Analysis table: each word is a weighted vector over the
// documents ("concepts") it occurs in.
class EsaIndex {
 public:
  // Lines of `title<TAB>text`.
  static std::vector<EsaDocument> ReadCorpus(std::istream& in);

  static EsaIndex Build(const std::vector<EsaDocument>& documents, EsaWeighting weighting,
                        const StopwordSet& stopwords, int min_doc_freq = 1);

  // Text serialization; weights are written as hex floats so a round trip
  // is bit-exact.
  void Save(std::ostream& out) const;
  static EsaIndex Load(std::istream& in);

  // nullptr for words not in the index.
  const SparseVector* Vector(std::string_view word) const;

  const std::vector<std::string>& concepts() const { return concepts_; }
  const std::map<std::string, SparseVector>& vectors() const { return vectors_; }
  EsaWeighting weighting() const { return weighting_; }

  friend bool operator==(const EsaIndex&, const EsaIndex&) = default;

 private:
  std::vector<std::string> concepts_;
  std::map<std::string, SparseVector> vectors_;
  EsaWeighting weighting_ = EsaWeighting::kRawCount;
};

double Cosine(const SparseVector& a, const SparseVector& b);

// Cosine similarity of the two word vectors; 0 when either is missing.
double EsaRelatedness(const EsaIndex& index, std::string_view a, std::string_view b);

// ESA-backed provider. Multiword terms ("paper_towel") are scored with the
// sum of their token vectors.
class EsaProvider : public RelatednessProvider {
 public:
  EsaProvider(const EsaIndex& index, StopwordSet stopwords)
      : index_(index), stopwords_(std::move(stopwords)) {}
  double Score(std::string_view a, std::string_view b) const override;

 private:
  SparseVector TermVector(std::string_view term) const;

  const EsaIndex& index_;
  StopwordSet stopwords_;
};

// Provider backed by an explicit symmetric table. Words listed in any pair
// are "known" and score 1 against themselves.
class TableProvider : public RelatednessProvider {
 public:
  void Set(std::string_view a, std::string_view b, double score);
  double Score(std::string_view a, std::string_view b) const override;

 private:
  std::map<std::pair<std::string, std::string>, double> table_;
  std::map<std::string, bool> known_;
};

// Scores every distinct pair 0 and identical words 1.
class NullProvider : public RelatednessProvider {
 public:
  double Score(std::string_view a, std::string_view b) const override { return a == b ? 1.0 : 0.0; }
};

}  // namespace sitnet

#endif  // SITNET_RELATEDNESS_H_
