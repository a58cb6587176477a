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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sitnet/error.h"

namespace sitnet {

bool operator==(const Synset& a, const Synset& b) {
  return a.id == b.id && a.pos == b.pos && a.lemmas == b.lemmas && a.gloss == b.gloss &&
         a.hypernyms == b.hypernyms && a.hyponyms == b.hyponyms && a.meronyms == b.meronyms &&
         a.holonyms == b.holonyms;
}

namespace {

char CanonicalPos(char pos) { return pos == 's' ? 'a' : pos; }

bool IsPos(std::string_view s) {
  return s.size() == 1 && (s[0] == 'n' || s[0] == 'v' || s[0] == 'a' || s[0] == 's' || s[0] == 'r');
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

SynsetId MakeId(std::string_view offset, char pos) {
  return std::string(offset) + "-" + CanonicalPos(pos);
}

std::string_view OffsetOf(std::string_view id) { return id.substr(0, id.find('-')); }

// Strips the syntactic marker WordNet appends to some adjectives, e.g.
// "galore(ip)".
std::string CleanLemma(std::string_view word) {
  size_t paren = word.find('(');
  if (paren != std::string_view::npos) word = word.substr(0, paren);
  return NormalizeTerm(word);
}

size_t ParseNumber(std::string_view text, int base, const std::string& source, size_t line,
                   const char* what) {
  if (text.empty()) throw ParseError(source, line, std::string("missing ") + what);
  size_t value = 0;
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (base == 16 && c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (base == 16 && c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw ParseError(source, line, std::string("bad ") + what + " '" + std::string(text) + "'");
    }
    value = value * base + digit;
  }
  return value;
}

// Skips license lines (leading space) and blank lines.
bool IsContentLine(const std::string& line) {
  return !line.empty() && line[0] != ' ' && !Trim(line).empty();
}

}  // namespace

class LexiconBuilder {
 public:
  void AddIndex(std::istream& in, const std::string& source) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!IsContentLine(line)) continue;
      std::vector<std::string> t = SplitWhitespace(line);
      if (t.size() < 4) throw ParseError(source, lineno, "truncated index line");
      if (!IsPos(t[1])) throw ParseError(source, lineno, "bad pos '" + t[1] + "'");
      size_t synset_cnt = ParseNumber(t[2], 10, source, lineno, "synset_cnt");
      size_t p_cnt = ParseNumber(t[3], 10, source, lineno, "p_cnt");
      size_t offsets_at = 4 + p_cnt + 2;
      if (t.size() != offsets_at + synset_cnt) {
        throw ParseError(source, lineno,
                         "index line has " + std::to_string(t.size()) + " fields, expected " +
                             std::to_string(offsets_at + synset_cnt));
      }
      char pos = CanonicalPos(t[1][0]);
      IndexEntry entry{CleanLemma(t[0]), pos, {}, source, lineno};
      for (size_t i = offsets_at; i < t.size(); ++i) {
        if (!AllDigits(t[i])) throw ParseError(source, lineno, "bad offset '" + t[i] + "'");
        entry.ids.push_back(MakeId(t[i], pos));
      }
      index_.push_back(std::move(entry));
    }
  }

  void AddData(std::istream& in, const std::string& source) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!IsContentLine(line)) continue;
      std::string_view view(line);
      std::string gloss;
      size_t bar = view.find('|');
      if (bar != std::string_view::npos) {
        gloss = std::string(Trim(view.substr(bar + 1)));
        view = view.substr(0, bar);
      }
      std::vector<std::string> t = SplitWhitespace(view);
      if (t.size() < 4) throw ParseError(source, lineno, "truncated data line");
      if (!AllDigits(t[0])) throw ParseError(source, lineno, "bad offset '" + t[0] + "'");
      if (!IsPos(t[2])) throw ParseError(source, lineno, "bad ss_type '" + t[2] + "'");
      char pos = CanonicalPos(t[2][0]);
      size_t w_cnt = ParseNumber(t[3], 16, source, lineno, "w_cnt");
      if (w_cnt == 0) throw ParseError(source, lineno, "synset without words");
      size_t at = 4;
      Raw raw;
      raw.lineno = lineno;
      raw.source = source;
      raw.synset.id = MakeId(t[0], pos);
      raw.synset.pos = pos;
      raw.synset.gloss = gloss;
      for (size_t i = 0; i < w_cnt; ++i) {
        if (at + 1 >= t.size()) throw ParseError(source, lineno, "truncated word list");
        std::string lemma = CleanLemma(t[at]);
        if (lemma.empty()) throw ParseError(source, lineno, "empty lemma");
        if (std::find(raw.synset.lemmas.begin(), raw.synset.lemmas.end(), lemma) ==
            raw.synset.lemmas.end()) {
          raw.synset.lemmas.push_back(lemma);
        }
        at += 2;
      }
      if (at >= t.size()) throw ParseError(source, lineno, "missing p_cnt");
      size_t p_cnt = ParseNumber(t[at], 10, source, lineno, "p_cnt");
      ++at;
      for (size_t i = 0; i < p_cnt; ++i) {
        if (at + 3 >= t.size()) {
          throw ParseError(source, lineno, "truncated pointer list");
        }
        const std::string& symbol = t[at];
        const std::string& offset = t[at + 1];
        const std::string& target_pos = t[at + 2];
        if (!AllDigits(offset) || !IsPos(target_pos)) {
          throw ParseError(source, lineno,
                           "bad pointer '" + symbol + " " + offset + " " + target_pos + "'");
        }
        SynsetId target = MakeId(offset, target_pos[0]);
        if (symbol == "@") {
          raw.synset.hypernyms.push_back(target);
        } else if (symbol == "~") {
          raw.synset.hyponyms.push_back(target);
        } else if (symbol == "%p" || symbol == "%m" || symbol == "%s") {
          raw.synset.meronyms.push_back(target);
        } else if (symbol == "#p" || symbol == "#m" || symbol == "#s") {
          raw.synset.holonyms.push_back(target);
        }
        at += 4;
      }
      if (raws_.contains(raw.synset.id)) {
        throw ParseError(source, lineno, "duplicate synset " + raw.synset.id);
      }
      raws_.emplace(raw.synset.id, std::move(raw));
    }
  }

  Lexicon Build() {
    Lexicon lex;
    for (auto& [id, raw] : raws_) {
      CheckTargets(raw, raw.synset.hypernyms);
      CheckTargets(raw, raw.synset.hyponyms);
      CheckTargets(raw, raw.synset.meronyms);
      CheckTargets(raw, raw.synset.holonyms);
    }
    // Declared links first, then the ones implied by the inverse pointer.
    std::map<SynsetId, std::vector<SynsetId>> hyper, hypo, mero, holo;
    for (auto& [id, raw] : raws_) {
      for (const auto& t : raw.synset.hypernyms) AddUnique(hyper[id], t);
      for (const auto& t : raw.synset.hyponyms) AddUnique(hypo[id], t);
      for (const auto& t : raw.synset.meronyms) AddUnique(mero[id], t);
      for (const auto& t : raw.synset.holonyms) AddUnique(holo[id], t);
    }
    auto mirror = [&](std::map<SynsetId, std::vector<SynsetId>>& forward,
                      std::map<SynsetId, std::vector<SynsetId>>& backward) {
      for (auto& [id, raw] : raws_) {
        auto it = backward.find(id);
        if (it == backward.end()) continue;
        for (const auto& t : it->second) AddUnique(forward[t], id);
      }
    };
    // hyper/hypo must end up exact inverses: fold each into the other twice
    // so both directions see every link.
    mirror(hyper, hypo);
    mirror(hypo, hyper);
    mirror(mero, holo);
    mirror(holo, mero);

    for (auto& [id, raw] : raws_) {
      Synset s = std::move(raw.synset);
      s.hypernyms = std::move(hyper[id]);
      s.hyponyms = std::move(hypo[id]);
      s.meronyms = std::move(mero[id]);
      s.holonyms = std::move(holo[id]);
      if (s.hypernyms.empty()) lex.roots_.push_back(id);
      lex.synsets_.emplace(id, std::move(s));
    }

    CheckAcyclic(lex);
    ComputeDepths(lex);

    for (const IndexEntry& entry : index_) {
      auto& ids = lex.lemma_index_[{entry.lemma, entry.pos}];
      for (const auto& id : entry.ids) {
        if (!lex.synsets_.contains(id)) {
          throw ParseError(entry.source, entry.lineno,
                           "unknown synset " + id + " for '" + entry.lemma + "'");
        }
        AddUnique(ids, id);
      }
    }
    // Lemmas that appear only in data lines are appended in id order.
    for (const auto& [id, s] : lex.synsets_) {
      for (const auto& lemma : s.lemmas) {
        AddUnique(lex.lemma_index_[{lemma, s.pos}], id);
        lex.all_lemmas_.insert(lemma);
      }
    }
    for (const auto& [key, ids] : lex.lemma_index_) lex.all_lemmas_.insert(key.first);
    return lex;
  }

 private:
  struct IndexEntry {
    std::string lemma;
    char pos;
    std::vector<SynsetId> ids;
    std::string source;
    size_t lineno;
  };
  struct Raw {
    Synset synset;
    std::string source;
    size_t lineno = 0;
  };

  static void AddUnique(std::vector<SynsetId>& list, const SynsetId& id) {
    if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
  }

  void CheckTargets(const Raw& raw, const std::vector<SynsetId>& targets) const {
    for (const auto& t : targets) {
      if (!raws_.contains(t)) {
        throw ParseError(raw.source, raw.lineno, "pointer to unknown synset " + t);
      }
    }
  }

  static void CheckAcyclic(const Lexicon& lex) {
    enum Color { kWhite, kGrey, kBlack };
    std::unordered_map<SynsetId, Color> color;
    std::vector<SynsetId> stack;
    // Iterative DFS keeps deep hierarchies off the call stack.
    for (const auto& [start, unused] : lex.synsets_) {
      if (color[start] != kWhite) continue;
      std::vector<std::pair<SynsetId, size_t>> frames{{start, 0}};
      color[start] = kGrey;
      stack.push_back(start);
      while (!frames.empty()) {
        auto& [id, next] = frames.back();
        const auto& parents = lex.synsets_.at(id).hypernyms;
        if (next < parents.size()) {
          const SynsetId& parent = parents[next++];
          Color c = color[parent];
          if (c == kGrey) {
            auto from = std::find(stack.begin(), stack.end(), parent);
            std::vector<std::string> cycle(from, stack.end());
            cycle.push_back(parent);
            for (auto& member : cycle) {
              member += " (" + lex.synsets_.at(member).lemmas.front() + ")";
            }
            throw CycleError("cyclic hypernyms", std::move(cycle));
          }
          if (c == kWhite) {
            color[parent] = kGrey;
            stack.push_back(parent);
            frames.emplace_back(parent, 0);
          }
        } else {
          color[id] = kBlack;
          stack.pop_back();
          frames.pop_back();
        }
      }
    }
  }

  static void ComputeDepths(Lexicon& lex) {
    std::function<int(const SynsetId&)> depth = [&](const SynsetId& id) -> int {
      auto it = lex.depth_.find(id);
      if (it != lex.depth_.end()) return it->second;
      int best = 0;
      for (const auto& parent : lex.synsets_.at(id).hypernyms) {
        best = std::max(best, depth(parent));
      }
      lex.depth_[id] = best + 1;
      return best + 1;
    };
    for (const auto& [id, unused] : lex.synsets_) depth(id);
  }

  std::vector<IndexEntry> index_;
  std::map<SynsetId, Raw> raws_;
};

Lexicon Lexicon::Parse(std::istream& index, std::istream& data) {
  LexiconBuilder builder;
  builder.AddData(data, "data");
  builder.AddIndex(index, "index");
  return builder.Build();
}

Lexicon Lexicon::Load(const std::filesystem::path& dir) {
  LexiconBuilder builder;
  bool found = false;
  for (const char* pos : {"noun", "verb", "adj", "adv"}) {
    std::filesystem::path index_path = dir / (std::string("index.") + pos);
    std::filesystem::path data_path = dir / (std::string("data.") + pos);
    if (!std::filesystem::exists(data_path)) continue;
    std::ifstream data(data_path);
    std::ifstream index(index_path);
    if (!data || !index) {
      throw ConfigError("cannot open lexicon files in " + dir.string());
    }
    builder.AddData(data, data_path.filename().string());
    builder.AddIndex(index, index_path.filename().string());
    found = true;
  }
  if (!found) throw ConfigError("no data.<pos> files in " + dir.string());
  return builder.Build();
}

void Lexicon::Write(std::ostream& index, std::ostream& data) const {
  char buf[32];
  for (const auto& [id, s] : synsets_) {
    std::snprintf(buf, sizeof(buf), "%02zx", s.lemmas.size());
    data << OffsetOf(id) << " 00 " << s.pos << ' ' << buf;
    for (const auto& lemma : s.lemmas) data << ' ' << lemma << " 0";
    size_t p_cnt = s.hypernyms.size() + s.hyponyms.size() + s.meronyms.size() + s.holonyms.size();
    std::snprintf(buf, sizeof(buf), "%03zu", p_cnt);
    data << ' ' << buf;
    auto pointers = [&](const char* symbol, const std::vector<SynsetId>& ids) {
      for (const auto& target : ids) {
        data << ' ' << symbol << ' ' << OffsetOf(target) << ' '
             << target.substr(target.find('-') + 1) << " 0000";
      }
    };
    pointers("@", s.hypernyms);
    pointers("~", s.hyponyms);
    pointers("%p", s.meronyms);
    pointers("#p", s.holonyms);
    data << " | " << s.gloss << '\n';
  }
  for (const auto& [key, ids] : lemma_index_) {
    index << key.first << ' ' << key.second << ' ' << ids.size() << " 0 " << ids.size() << " 0";
    for (const auto& id : ids) index << ' ' << OffsetOf(id);
    index << '\n';
  }
}

const Synset* Lexicon::Find(std::string_view id) const {
  auto it = synsets_.find(std::string(id));
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& Lexicon::Get(std::string_view id) const {
  const Synset* s = Find(id);
  if (s == nullptr) throw Error("unknown synset id " + std::string(id));
  return *s;
}

const std::vector<SynsetId>& Lexicon::SenseIds(std::string_view word, char pos) const {
  static const std::vector<SynsetId> kEmpty;
  auto it = lemma_index_.find({NormalizeTerm(word), CanonicalPos(pos)});
  return it == lemma_index_.end() ? kEmpty : it->second;
}

std::vector<const Synset*> Lexicon::Senses(std::string_view word, char pos) const {
  std::vector<const Synset*> out;
  for (const auto& id : SenseIds(word, pos)) out.push_back(&synsets_.at(id));
  return out;
}

bool Lexicon::HasLemma(std::string_view term) const {
  return all_lemmas_.contains(NormalizeTerm(term));
}

int Lexicon::Depth(std::string_view id) const {
  auto it = depth_.find(std::string(id));
  if (it == depth_.end()) throw Error("unknown synset id " + std::string(id));
  return it->second;
}

std::vector<SynsetId> Lexicon::Ancestors(std::string_view id) const {
  std::set<SynsetId> seen;
  std::vector<SynsetId> pending{std::string(id)};
  while (!pending.empty()) {
    SynsetId current = std::move(pending.back());
    pending.pop_back();
    if (!seen.insert(current).second) continue;
    for (const auto& parent : Get(current).hypernyms) pending.push_back(parent);
  }
  return {seen.begin(), seen.end()};
}

double WupSimilarity(const Lexicon& lexicon, const Synset& a, const Synset& b) {
  std::vector<SynsetId> ancestors_a = lexicon.Ancestors(a.id);
  std::vector<SynsetId> ancestors_b = lexicon.Ancestors(b.id);
  std::vector<SynsetId> common;
  std::set_intersection(ancestors_a.begin(), ancestors_a.end(), ancestors_b.begin(),
                        ancestors_b.end(), std::back_inserter(common));
  if (common.empty()) {
    throw SimilarityUndefined("no common ancestor for " + a.id + " and " + b.id);
  }
  int lcs_depth = 0;
  for (const auto& id : common) lcs_depth = std::max(lcs_depth, lexicon.Depth(id));
  return 2.0 * lcs_depth / (lexicon.Depth(a.id) + lexicon.Depth(b.id));
}

CorpusFrequencies CorpusFrequencies::Read(std::istream& in) {
  CorpusFrequencies freq;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 2) throw ParseError("corpus", lineno, "expected word<TAB>count");
    std::string word = NormalizeTerm(fields[0]);
    size_t count = ParseNumber(Trim(fields[1]), 10, "corpus", lineno, "count");
    if (word.empty() || count == 0) {
      throw ParseError("corpus", lineno, "empty word or zero count");
    }
    freq.counts[word] += count;
    freq.total += count;
  }
  return freq;
}

double InformationContent(std::string_view word, const CorpusFrequencies& freq) {
  auto it = freq.counts.find(NormalizeTerm(word));
  if (it == freq.counts.end()) {
    return -std::log(1.0 / static_cast<double>(freq.total + 1));
  }
  return -std::log(static_cast<double>(it->second) / static_cast<double>(freq.total));
}

std::vector<std::string> WspNeighbors(const Lexicon& lexicon, const Synset& sense, WspSource source,
                                      const StopwordSet& stopwords) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& w) {
    if (!w.empty() && seen.insert(w).second) words.push_back(w);
  };
  auto add_lemmas = [&](const std::vector<SynsetId>& ids) {
    for (const auto& id : ids) {
      for (const auto& lemma : lexicon.Get(id).lemmas) add(lemma);
    }
  };
  switch (source) {
    case WspSource::kSynonyms:
      for (const auto& lemma : sense.lemmas) add(lemma);
      break;
    case WspSource::kGlossWords:
      for (const auto& w : Tokenize(sense.gloss, stopwords)) add(w);
      break;
    case WspSource::kHypernymsHyponyms:
      add_lemmas(sense.hypernyms);
      add_lemmas(sense.hyponyms);
      break;
    case WspSource::kMeronymsHolonyms:
      add_lemmas(sense.meronyms);
      add_lemmas(sense.holonyms);
      break;
    case WspSource::kHyponymGlossWords:
      for (const auto& id : sense.hyponyms) {
        for (const auto& w : Tokenize(lexicon.Get(id).gloss, stopwords)) add(w);
      }
      break;
  }
  return words;
}

}  // namespace sitnet
