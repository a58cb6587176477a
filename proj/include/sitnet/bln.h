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

#ifndef SITNET_BLN_H_
#define SITNET_BLN_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sitnet/edges.h"
#include "sitnet/netgen.h"
#include "sitnet/relatedness.h"

namespace sitnet {

// The object meta-variable used by every generated fragment.
inline constexpr std::string_view kMetaVariable = "x";

// A predicate applied to (subject, target), e.g. IsA(x,garlic). The subject
// is either the meta-variable or an entity.
struct Atom {
  Relation predicate = Relation::kIsA;
  std::string subject;
  std::string target;

  auto operator<=>(const Atom&) const = default;
};

std::string FormatAtom(const Atom& atom);
Atom ParseAtom(std::string_view text);
Atom Substitute(const Atom& atom, std::string_view object);

struct Signature {
  Relation predicate;
  std::string subject_type;
  std::string target_type;
};

struct Declaration {
  std::set<std::string> types;
  std::vector<Signature> signatures;
  std::map<std::string, std::set<std::string>> entities;

  // The five types and the four binary predicate signatures.
  static Declaration Standard();
  const Signature* FindSignature(Relation predicate) const;
  void Validate() const;
};

// Conditional probability of `child` given its parents. Row i holds
// P(child = true) for the configuration whose binary digits are the parent
// values in listed order, the first parent being the most significant bit.
struct Fragment {
  Atom child;
  std::vector<Atom> parents;
  std::vector<double> cpf;
  // When set, every row with at least one true parent is pinned to this value.
  std::optional<double> override_value;

  void ApplyOverride();
};

// Propositional formula over atoms.
struct Formula {
  enum class Op { kAtom, kNot, kAnd, kOr, kImplies };
  Op op = Op::kAtom;
  Atom atom;
  std::vector<Formula> args;
};

// Grammar: implies := or ("->" implies)?; or := and ("|" and)*;
// and := unary ("&" unary)*; unary := "!" unary | "(" implies ")" | atom.
Formula ParseFormula(std::string_view text);
std::string FormatFormula(const Formula& formula);
void CollectAtoms(const Formula& formula, std::vector<Atom>& out);
Formula SubstituteFormula(const Formula& formula, std::string_view object);

struct LogicConstraint {
  Formula formula;
};

struct BlnModel {
  Declaration declaration;
  std::vector<Fragment> fragments;
  std::vector<LogicConstraint> constraints;

  void Write(std::ostream& out) const;
  static BlnModel Read(std::istream& in);
};

inline constexpr size_t kMaxParents = 12;

// One fragment per graph node, parents taken from the node's incoming edges.
// CPFs start uninformed (0.5). Fragments come out in topological order.
BlnModel ModelFromGraph(const ConceptGraph& graph, size_t max_parents = kMaxParents);

// The abstract variable that stands for a graph node.
Atom NodeAtom(const ConceptNode& node);

struct EvidenceSet {
  std::vector<std::string> variables;        // atom strings
  std::vector<std::vector<uint8_t>> worlds;  // one value per variable

  std::optional<size_t> Column(std::string_view variable) const;
};

struct SimulationOptions {
  double alpha = 0.5;
  size_t n_worlds = 5000;
  uint64_t seed = 1;
  // WordNet IsA links are taxonomic entailments and fire with probability 1.
  bool certain_isa = true;
};

// Per-edge activation probability used by the simulator.
struct EdgeLikelihood {
  std::string parent;  // atom string
  double probability;
};

struct GenerativeVariable {
  std::string name;  // atom string
  std::vector<EdgeLikelihood> parents;
  double prior = 0.0;  // used only when there are no parents
};

// The noisy-OR generative model behind the simulated evidence, in
// topological order. Edge probability is
//   alpha * strength + (1 - alpha) * relatedness(src, dst)
// and parentless variables get a uniform prior 1 / (number of them).
std::vector<GenerativeVariable> GenerativeModel(const ConceptGraph& graph,
                                                const RelatednessProvider& provider,
                                                const SimulationOptions& options);

EvidenceSet SimulateEvidence(const ConceptGraph& graph, const RelatednessProvider& provider,
                             const SimulationOptions& options);

// Frequency-count CPF estimate with a symmetric pseudocount. Configurations
// never observed get 0.5.
std::vector<Fragment> LearnCpfs(std::vector<Fragment> fragments, const EvidenceSet& evidence,
                                double pseudocount);

struct GroundVariable {
  std::string name;
  Atom atom;  // meaningless for auxiliary variables
  std::vector<size_t> parents;
  std::vector<double> cpf;  // same row order as Fragment::cpf
  bool auxiliary = false;
};

class GroundNetwork {
 public:
  size_t Add(GroundVariable variable);
  std::optional<size_t> Index(std::string_view name) const;
  size_t IndexOrThrow(std::string_view name) const;

  const std::vector<GroundVariable>& variables() const { return variables_; }
  const GroundVariable& variable(size_t i) const { return variables_[i]; }
  size_t size() const { return variables_.size(); }

  // Parents before children. Throws CycleError if the graph is cyclic.
  const std::vector<size_t>& order() const { return order_; }
  void Finalize();

  std::vector<size_t> AuxiliaryVariables() const;

 private:
  std::vector<GroundVariable> variables_;
  std::map<std::string, size_t, std::less<>> index_;
  std::vector<size_t> order_;
};

// Replicates the fragments for every object and adds one deterministic
// auxiliary variable per grounded constraint.
GroundNetwork Ground(const Declaration& declaration, const std::vector<Fragment>& fragments,
                     const std::vector<std::string>& objects,
                     const std::vector<LogicConstraint>& constraints = {});

}  // namespace sitnet

#endif  // SITNET_BLN_H_
