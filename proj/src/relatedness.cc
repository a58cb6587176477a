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

#include "sitnet/relatedness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "sitnet/error.h"

namespace sitnet {

std::vector<EsaDocument> EsaIndex::ReadCorpus(std::istream& in) {
  std::vector<EsaDocument> docs;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("esa corpus", lineno, "expected title<TAB>text");
    docs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return docs;
}

EsaIndex EsaIndex::Build(const std::vector<EsaDocument>& documents, EsaWeighting weighting,
                         const StopwordSet& stopwords, int min_doc_freq) {
  EsaIndex index;
  index.weighting_ = weighting;
  std::map<std::string, std::vector<std::pair<uint32_t, uint64_t>>> postings;
  for (uint32_t d = 0; d < documents.size(); ++d) {
    index.concepts_.push_back(documents[d].title);
    std::map<std::string, uint64_t> counts;
    for (auto& token : Tokenize(documents[d].text, stopwords)) ++counts[token];
    for (auto& [word, count] : counts) postings[word].emplace_back(d, count);
  }
  const double n_docs = static_cast<double>(documents.size());
  for (auto& [word, list] : postings) {
    if (static_cast<int>(list.size()) < min_doc_freq) continue;
    const double idf = std::log(n_docs / static_cast<double>(list.size()));
    SparseVector vec;
    for (auto [doc, count] : list) {
      double w = weighting == EsaWeighting::kRawCount ? static_cast<double>(count)
                                                      : static_cast<double>(count) * idf;
      if (w > 0.0) vec.emplace_back(doc, w);
    }
    if (!vec.empty()) index.vectors_.emplace(word, std::move(vec));
  }
  return index;
}

void EsaIndex::Save(std::ostream& out) const {
  out << "esa " << (weighting_ == EsaWeighting::kRawCount ? "raw_count" : "tfidf") << ' '
      << concepts_.size() << ' ' << vectors_.size() << '\n';
  for (const auto& title : concepts_) out << title << '\n';
  char buf[64];
  for (const auto& [word, vec] : vectors_) {
    out << word << ' ' << vec.size();
    for (auto [doc, w] : vec) {
      std::snprintf(buf, sizeof(buf), "%a", w);
      out << ' ' << doc << ':' << buf;
    }
    out << '\n';
  }
}

EsaIndex EsaIndex::Load(std::istream& in) {
  EsaIndex index;
  std::string line;
  size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError("esa index", lineno, "empty input");
  std::vector<std::string> header = SplitWhitespace(line);
  if (header.size() != 4 || header[0] != "esa") {
    throw ParseError("esa index", lineno, "bad header");
  }
  if (header[1] == "raw_count") {
    index.weighting_ = EsaWeighting::kRawCount;
  } else if (header[1] == "tfidf") {
    index.weighting_ = EsaWeighting::kTfidf;
  } else {
    throw ParseError("esa index", lineno, "unknown weighting " + header[1]);
  }
  size_t n_concepts = std::stoul(header[2]);
  size_t n_words = std::stoul(header[3]);
  for (size_t i = 0; i < n_concepts; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("esa index", lineno, "truncated");
    index.concepts_.push_back(line);
  }
  for (size_t i = 0; i < n_words; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("esa index", lineno, "truncated");
    std::vector<std::string> f = SplitWhitespace(line);
    if (f.size() < 2) throw ParseError("esa index", lineno, "bad vector line");
    size_t n = std::stoul(f[1]);
    if (f.size() != n + 2) throw ParseError("esa index", lineno, "bad entry count");
    SparseVector vec;
    for (size_t k = 0; k < n; ++k) {
      const std::string& entry = f[k + 2];
      size_t colon = entry.find(':');
      if (colon == std::string::npos) throw ParseError("esa index", lineno, "bad entry");
      uint32_t doc = static_cast<uint32_t>(std::stoul(entry.substr(0, colon)));
      double w = std::strtod(entry.c_str() + colon + 1, nullptr);
      if (doc >= n_concepts || !(w > 0.0) || (!vec.empty() && vec.back().first >= doc)) {
        throw ParseError("esa index", lineno, "invalid sparse entry");
      }
      vec.emplace_back(doc, w);
    }
    index.vectors_.emplace(f[0], std::move(vec));
  }
  return index;
}

const SparseVector* EsaIndex::Vector(std::string_view word) const {
  auto it = vectors_.find(std::string(word));
  return it == vectors_.end() ? nullptr : &it->second;
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (auto [i, w] : a) na += w * w;
  for (auto [i, w] : b) nb += w * w;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      dot += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

double EsaRelatedness(const EsaIndex& index, std::string_view a, std::string_view b) {
  const SparseVector* va = index.Vector(a);
  const SparseVector* vb = index.Vector(b);
  if (va == nullptr || vb == nullptr) return 0.0;
  if (a == b) return 1.0;
  return Cosine(*va, *vb);
}

SparseVector EsaProvider::TermVector(std::string_view term) const {
  std::map<uint32_t, double> sum;
  for (const auto& token : Tokenize(term, stopwords_)) {
    if (const SparseVector* v = index_.Vector(token)) {
      for (auto [doc, w] : *v) sum[doc] += w;
    }
  }
  return {sum.begin(), sum.end()};
}

double EsaProvider::Score(std::string_view a, std::string_view b) const {
  SparseVector va = TermVector(a);
  if (va.empty()) return 0.0;
  if (NormalizeTerm(a) == NormalizeTerm(b)) return 1.0;
  return Cosine(va, TermVector(b));
}

void TableProvider::Set(std::string_view a, std::string_view b, double score) {
  std::string x = NormalizeTerm(a), y = NormalizeTerm(b);
  known_[x] = true;
  known_[y] = true;
  table_[{x, y}] = score;
  table_[{y, x}] = score;
}

double TableProvider::Score(std::string_view a, std::string_view b) const {
  std::string x = NormalizeTerm(a), y = NormalizeTerm(b);
  if (x == y) return known_.contains(x) ? 1.0 : 0.0;
  auto it = table_.find({x, y});
  return it == table_.end() ? 0.0 : it->second;
}

}  // namespace sitnet
