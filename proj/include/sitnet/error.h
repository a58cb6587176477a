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

#ifndef SITNET_ERROR_H_
#define SITNET_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace sitnet {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line. Carries the 1-based line number (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// A cycle in a structure that must be acyclic. `cycle` lists the members in
// traversal order.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<std::string> cycle)
      : Error(what + ": " + Join(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  static std::string Join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += " -> ";
      out += item;
    }
    return out;
  }
  std::vector<std::string> cycle_;
};

// Wu-Palmer similarity requested for synsets with no common ancestor.
class SimilarityUndefined : public Error {
 public:
  using Error::Error;
};

// Seed word without noun senses.
class UnknownSeedError : public Error {
 public:
  explicit UnknownSeedError(const std::string& word)
      : Error("unknown seed word: " + word), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// Relation term without senses in the lexicon.
class UnknownTermError : public Error {
 public:
  explicit UnknownTermError(const std::string& term)
      : Error("term not in lexicon: " + term), term_(term) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

// Weight normalization against a zero maximum.
class DegenerateScaleError : public Error {
 public:
  using Error::Error;
};

// A fragment with more parents than the full-table CPF limit.
class ModelTooDenseError : public Error {
 public:
  ModelTooDenseError(const std::string& node, size_t parents, size_t limit)
      : Error("node " + node + " has " + std::to_string(parents) + " parents (limit " +
              std::to_string(limit) + ")"),
        node_(node) {}
  const std::string& node() const { return node_; }

 private:
  std::string node_;
};

// Exact enumeration refused because the network is too large.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Gibbs sampling requested on a network with unclamped deterministic rows.
class ErgodicityError : public Error {
 public:
  using Error::Error;
};

// Gold-labeled triples missing from the inference results.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, std::vector<std::string> missing)
      : Error(what), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

// Invalid configuration or command usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage failed; wraps the underlying message with the stage name.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : Error("stage " + stage + ": " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace sitnet

#endif  // SITNET_ERROR_H_
