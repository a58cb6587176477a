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

#include "sitnet/bln.h"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "sitnet/error.h"
#include "sitnet/random.h"

namespace sitnet {

// ---------------------------------------------------------------------------
// Atoms and declarations

std::string FormatAtom(const Atom& atom) {
  std::string out(RelationName(atom.predicate));
  out += '(';
  out += atom.subject;
  out += ',';
  out += atom.target;
  out += ')';
  return out;
}

Atom ParseAtom(std::string_view text) {
  text = Trim(text);
  size_t open = text.find('(');
  size_t comma = text.find(',', open == std::string_view::npos ? 0 : open);
  if (open == std::string_view::npos || comma == std::string_view::npos || text.back() != ')' ||
      text.find(',', comma + 1) != std::string_view::npos) {
    throw Error("malformed atom '" + std::string(text) + "'");
  }
  std::optional<Relation> predicate = ParseRelation(Trim(text.substr(0, open)));
  if (!predicate) throw Error("unknown predicate in '" + std::string(text) + "'");
  Atom atom{*predicate, std::string(Trim(text.substr(open + 1, comma - open - 1))),
            std::string(Trim(text.substr(comma + 1, text.size() - comma - 2)))};
  if (atom.subject.empty() || atom.target.empty()) {
    throw Error("empty argument in '" + std::string(text) + "'");
  }
  return atom;
}

Atom Substitute(const Atom& atom, std::string_view object) {
  Atom out = atom;
  if (out.subject == kMetaVariable) out.subject = std::string(object);
  return out;
}

Declaration Declaration::Standard() {
  Declaration d;
  d.types = {"object", "concept", "property", "location", "affordance"};
  d.signatures = {{Relation::kIsA, "object", "concept"},
                  {Relation::kHasProperty, "object", "property"},
                  {Relation::kAtLocation, "object", "location"},
                  {Relation::kUsedFor, "object", "affordance"}};
  return d;
}

const Signature* Declaration::FindSignature(Relation predicate) const {
  for (const auto& s : signatures) {
    if (s.predicate == predicate) return &s;
  }
  return nullptr;
}

void Declaration::Validate() const {
  for (const auto& s : signatures) {
    if (!types.contains(s.subject_type) || !types.contains(s.target_type)) {
      throw Error("signature " + std::string(RelationName(s.predicate)) +
                  " uses an undeclared type");
    }
  }
  for (const auto& [name, entity_types] : entities) {
    if (entity_types.empty()) throw Error("entity " + name + " has no type");
    for (const auto& t : entity_types) {
      if (!types.contains(t)) throw Error("entity " + name + " has undeclared type " + t);
    }
  }
}

void Fragment::ApplyOverride() {
  if (!override_value) return;
  for (size_t row = 1; row < cpf.size(); ++row) cpf[row] = *override_value;
}

// ---------------------------------------------------------------------------
// Formulas

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula Parse() {
    Formula f = ParseImplies();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return f;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool Accept(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void Fail(const std::string& what) {
    throw ParseError("formula '" + std::string(text_) + "'", 0,
                     what + " at offset " + std::to_string(pos_));
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Accept("->")) {
      Formula f{Formula::Op::kImplies, {}, {}};
      f.args.push_back(std::move(lhs));
      f.args.push_back(ParseImplies());
      return f;
    }
    return lhs;
  }
  Formula ParseOr() {
    Formula lhs = ParseAnd();
    if (!Accept("|")) return lhs;
    Formula f{Formula::Op::kOr, {}, {}};
    f.args.push_back(std::move(lhs));
    do {
      f.args.push_back(ParseAnd());
    } while (Accept("|"));
    return f;
  }
  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    if (!Accept("&")) return lhs;
    Formula f{Formula::Op::kAnd, {}, {}};
    f.args.push_back(std::move(lhs));
    do {
      f.args.push_back(ParseUnary());
    } while (Accept("&"));
    return f;
  }
  Formula ParseUnary() {
    if (Accept("!")) {
      Formula f{Formula::Op::kNot, {}, {}};
      f.args.push_back(ParseUnary());
      return f;
    }
    if (Accept("(")) {
      Formula f = ParseImplies();
      if (!Accept(")")) Fail("expected ')'");
      return f;
    }
    SkipSpace();
    size_t close = text_.find(')', pos_);
    if (close == std::string_view::npos) Fail("expected atom");
    Formula f{Formula::Op::kAtom, ParseAtom(text_.substr(pos_, close + 1 - pos_)), {}};
    pos_ = close + 1;
    return f;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Formula ParseFormula(std::string_view text) { return FormulaParser(text).Parse(); }

std::string FormatFormula(const Formula& f) {
  auto join = [&](const char* op) {
    std::string out = "(";
    for (size_t i = 0; i < f.args.size(); ++i) {
      if (i > 0) out += op;
      out += FormatFormula(f.args[i]);
    }
    return out + ")";
  };
  switch (f.op) {
    case Formula::Op::kAtom:
      return FormatAtom(f.atom);
    case Formula::Op::kNot:
      return "!" + FormatFormula(f.args[0]);
    case Formula::Op::kAnd:
      return join(" & ");
    case Formula::Op::kOr:
      return join(" | ");
    case Formula::Op::kImplies:
      return join(" -> ");
  }
  return "";
}

void CollectAtoms(const Formula& formula, std::vector<Atom>& out) {
  if (formula.op == Formula::Op::kAtom) {
    if (std::find(out.begin(), out.end(), formula.atom) == out.end()) out.push_back(formula.atom);
    return;
  }
  for (const auto& arg : formula.args) CollectAtoms(arg, out);
}

Formula SubstituteFormula(const Formula& formula, std::string_view object) {
  Formula out = formula;
  if (out.op == Formula::Op::kAtom) out.atom = Substitute(out.atom, object);
  for (auto& arg : out.args) arg = SubstituteFormula(arg, object);
  return out;
}

namespace {

bool Evaluate(const Formula& f, const std::vector<Atom>& atoms, size_t row) {
  switch (f.op) {
    case Formula::Op::kAtom: {
      size_t i = static_cast<size_t>(std::find(atoms.begin(), atoms.end(), f.atom) - atoms.begin());
      return (row >> (atoms.size() - 1 - i)) & 1u;
    }
    case Formula::Op::kNot:
      return !Evaluate(f.args[0], atoms, row);
    case Formula::Op::kAnd:
      return std::all_of(f.args.begin(), f.args.end(),
                         [&](const Formula& a) { return Evaluate(a, atoms, row); });
    case Formula::Op::kOr:
      return std::any_of(f.args.begin(), f.args.end(),
                         [&](const Formula& a) { return Evaluate(a, atoms, row); });
    case Formula::Op::kImplies:
      return !Evaluate(f.args[0], atoms, row) || Evaluate(f.args[1], atoms, row);
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Model file

void BlnModel::Write(std::ostream& out) const {
  out << "# sitnet bln model\n";
  for (const auto& t : declaration.types) out << "TYPE\t" << t << '\n';
  for (const auto& s : declaration.signatures) {
    out << "SIGNATURE\t" << RelationName(s.predicate) << '\t' << s.subject_type << '\t'
        << s.target_type << '\n';
  }
  for (const auto& [name, types] : declaration.entities) {
    out << "ENTITY\t" << name << '\t';
    bool first = true;
    for (const auto& t : types) {
      out << (first ? "" : ",") << t;
      first = false;
    }
    out << '\n';
  }
  for (const auto& f : fragments) {
    out << "FRAGMENT\t" << FormatAtom(f.child) << '\t';
    if (f.parents.empty()) out << '-';
    for (size_t i = 0; i < f.parents.size(); ++i) {
      out << (i > 0 ? " " : "") << FormatAtom(f.parents[i]);
    }
    out << "\nCPF\t";
    for (size_t i = 0; i < f.cpf.size(); ++i) out << (i > 0 ? " " : "") << FormatDouble(f.cpf[i]);
    out << '\n';
    if (f.override_value) {
      out << "OVERRIDE\t" << FormatAtom(f.child) << '\t' << FormatDouble(*f.override_value) << '\n';
    }
  }
  for (const auto& c : constraints) out << "CONSTRAINT\t" << FormatFormula(c.formula) << '\n';
}

BlnModel BlnModel::Read(std::istream& in) {
  BlnModel model;
  std::string line;
  size_t lineno = 0;
  Fragment* current = nullptr;
  auto fail = [&](const std::string& what) { throw ParseError("model", lineno, what); };
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    try {
      if (f[0] == "TYPE" && f.size() == 2) {
        model.declaration.types.insert(f[1]);
      } else if (f[0] == "SIGNATURE" && f.size() == 4) {
        std::optional<Relation> r = ParseRelation(f[1]);
        if (!r) fail("unknown predicate " + f[1]);
        model.declaration.signatures.push_back({*r, f[2], f[3]});
      } else if (f[0] == "ENTITY" && f.size() == 3) {
        auto& types = model.declaration.entities[f[1]];
        std::stringstream ss(f[2]);
        std::string t;
        while (std::getline(ss, t, ',')) {
          if (!t.empty()) types.insert(t);
        }
      } else if (f[0] == "FRAGMENT" && f.size() == 3) {
        Fragment fragment;
        fragment.child = ParseAtom(f[1]);
        if (Trim(f[2]) != "-") {
          for (const auto& p : SplitWhitespace(f[2])) fragment.parents.push_back(ParseAtom(p));
        }
        model.fragments.push_back(std::move(fragment));
        current = &model.fragments.back();
      } else if (f[0] == "CPF" && f.size() == 2) {
        if (current == nullptr) fail("CPF before FRAGMENT");
        current->cpf.clear();
        for (const auto& v : SplitWhitespace(f[1])) {
          double p = std::stod(v);
          if (!(p >= 0.0 && p <= 1.0)) fail("probability out of range");
          current->cpf.push_back(p);
        }
        if (current->cpf.size() != (size_t{1} << current->parents.size())) {
          fail("CPF needs " + std::to_string(size_t{1} << current->parents.size()) + " rows");
        }
      } else if (f[0] == "OVERRIDE" && f.size() == 3) {
        Atom child = ParseAtom(f[1]);
        double value = std::stod(f[2]);
        if (!(value >= 0.0 && value <= 1.0)) fail("override out of range");
        bool found = false;
        for (auto& fragment : model.fragments) {
          if (fragment.child == child) {
            fragment.override_value = value;
            fragment.ApplyOverride();
            found = true;
          }
        }
        if (!found) fail("OVERRIDE for unknown fragment " + f[1]);
      } else if (f[0] == "CONSTRAINT" && f.size() == 2) {
        model.constraints.push_back({ParseFormula(f[1])});
      } else {
        fail("unrecognized record '" + f[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  for (const auto& fragment : model.fragments) {
    if (fragment.cpf.size() != (size_t{1} << fragment.parents.size())) {
      throw ParseError("model", lineno, "fragment " + FormatAtom(fragment.child) + " lacks a CPF");
    }
  }
  model.declaration.Validate();
  return model;
}

// ---------------------------------------------------------------------------
// Model construction

Atom NodeAtom(const ConceptNode& node) {
  switch (node.kind) {
    case NodeKind::kConcept:
      return {Relation::kIsA, std::string(kMetaVariable), node.id};
    case NodeKind::kLocation:
      return {Relation::kAtLocation, std::string(kMetaVariable), node.term};
    case NodeKind::kProperty:
      return {Relation::kHasProperty, std::string(kMetaVariable), node.term};
    case NodeKind::kAffordance:
      return {Relation::kUsedFor, std::string(kMetaVariable), node.term};
  }
  return {};
}

namespace {

struct NodeOrder {
  std::vector<std::string> ids;  // topological, ties by atom string
  std::map<std::string, std::vector<RelationEdge>> incoming;
};

NodeOrder TopologicalNodes(const ConceptGraph& graph) {
  NodeOrder out;
  std::map<std::string, size_t> indegree;
  std::map<std::string, std::vector<std::string>> outgoing;
  for (const auto& [id, node] : graph.nodes()) indegree[id] = 0;
  for (const auto& edge : graph.Edges()) {
    out.incoming[edge.dst].push_back(edge);
    outgoing[edge.src].push_back(edge.dst);
    ++indegree[edge.dst];
  }
  auto atom_name = [&](const std::string& id) { return FormatAtom(NodeAtom(*graph.Find(id))); };
  std::set<std::pair<std::string, std::string>> ready;
  for (const auto& [id, d] : indegree) {
    if (d == 0) ready.emplace(atom_name(id), id);
  }
  while (!ready.empty()) {
    auto [name, id] = *ready.begin();
    ready.erase(ready.begin());
    out.ids.push_back(id);
    for (const auto& next : outgoing[id]) {
      if (--indegree[next] == 0) ready.emplace(atom_name(next), next);
    }
  }
  if (out.ids.size() != graph.nodes().size()) {
    std::vector<std::string> stuck;
    for (const auto& [id, d] : indegree) {
      if (d > 0) stuck.push_back(id);
    }
    throw CycleError("concept graph has a cycle through", stuck);
  }
  return out;
}

}  // namespace

BlnModel ModelFromGraph(const ConceptGraph& graph, size_t max_parents) {
  BlnModel model;
  model.declaration = Declaration::Standard();
  NodeOrder order = TopologicalNodes(graph);
  for (const auto& id : order.ids) {
    const ConceptNode& node = *graph.Find(id);
    Fragment fragment;
    fragment.child = NodeAtom(node);
    model.declaration.entities[fragment.child.target].insert(std::string(NodeKindName(node.kind)));
    for (const auto& edge : order.incoming[id]) {
      fragment.parents.push_back(NodeAtom(*graph.Find(edge.src)));
    }
    std::sort(fragment.parents.begin(), fragment.parents.end(),
              [](const Atom& a, const Atom& b) { return FormatAtom(a) < FormatAtom(b); });
    if (fragment.parents.size() > max_parents) {
      throw ModelTooDenseError(id, fragment.parents.size(), max_parents);
    }
    fragment.cpf.assign(size_t{1} << fragment.parents.size(), 0.5);
    model.fragments.push_back(std::move(fragment));
  }
  return model;
}

// ---------------------------------------------------------------------------
// Simulated evidence and learning

std::optional<size_t> EvidenceSet::Column(std::string_view variable) const {
  auto it = std::find(variables.begin(), variables.end(), variable);
  if (it == variables.end()) return std::nullopt;
  return static_cast<size_t>(it - variables.begin());
}

std::vector<GenerativeVariable> GenerativeModel(const ConceptGraph& graph,
                                                const RelatednessProvider& provider,
                                                const SimulationOptions& options) {
  NodeOrder order = TopologicalNodes(graph);
  std::vector<GenerativeVariable> vars;
  size_t roots = 0;
  for (const auto& id : order.ids) {
    const ConceptNode& node = *graph.Find(id);
    GenerativeVariable var{FormatAtom(NodeAtom(node)), {}, 0.0};
    for (const auto& edge : order.incoming[id]) {
      const ConceptNode& src = *graph.Find(edge.src);
      double p;
      if (options.certain_isa && edge.relation == Relation::kIsA) {
        p = 1.0;
      } else {
        p = options.alpha * edge.strength +
            (1.0 - options.alpha) * provider.Score(src.term, node.term);
      }
      var.parents.push_back({FormatAtom(NodeAtom(src)), std::clamp(p, 0.0, 1.0)});
    }
    if (var.parents.empty()) ++roots;
    vars.push_back(std::move(var));
  }
  for (auto& var : vars) {
    if (var.parents.empty()) var.prior = 1.0 / static_cast<double>(roots);
  }
  return vars;
}

EvidenceSet SimulateEvidence(const ConceptGraph& graph, const RelatednessProvider& provider,
                             const SimulationOptions& options) {
  if (options.n_worlds == 0) throw ConfigError("n_worlds must be at least 1");
  std::vector<GenerativeVariable> vars = GenerativeModel(graph, provider, options);
  std::map<std::string, size_t> column;
  EvidenceSet evidence;
  for (size_t i = 0; i < vars.size(); ++i) {
    column[vars[i].name] = i;
    evidence.variables.push_back(vars[i].name);
  }
  std::vector<std::vector<std::pair<size_t, double>>> parents(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    for (const auto& p : vars[i].parents)
      parents[i].emplace_back(column.at(p.parent), p.probability);
  }
  Rng rng(options.seed);
  evidence.worlds.reserve(options.n_worlds);
  for (size_t w = 0; w < options.n_worlds; ++w) {
    std::vector<uint8_t> world(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) {
      double p;
      if (parents[i].empty()) {
        p = vars[i].prior;
      } else {
        double stay_false = 1.0;
        for (auto [parent, prob] : parents[i]) {
          if (world[parent]) stay_false *= 1.0 - prob;
        }
        p = 1.0 - stay_false;
      }
      world[i] = rng.Uniform() < p ? 1 : 0;
    }
    evidence.worlds.push_back(std::move(world));
  }
  return evidence;
}

std::vector<Fragment> LearnCpfs(std::vector<Fragment> fragments, const EvidenceSet& evidence,
                                double pseudocount) {
  if (pseudocount < 0.0) throw ConfigError("pseudocount must be non-negative");
  for (auto& fragment : fragments) {
    auto column = [&](const Atom& atom) {
      std::string name = FormatAtom(atom);
      std::optional<size_t> c = evidence.Column(name);
      if (!c) throw Error("evidence does not cover variable " + name);
      return *c;
    };
    size_t child = column(fragment.child);
    std::vector<size_t> parents;
    for (const auto& p : fragment.parents) parents.push_back(column(p));
    const size_t rows = size_t{1} << parents.size();
    std::vector<double> n_true(rows, 0.0), n_total(rows, 0.0);
    for (const auto& world : evidence.worlds) {
      size_t row = 0;
      for (size_t p : parents) row = (row << 1) | world[p];
      n_total[row] += 1.0;
      n_true[row] += world[child];
    }
    fragment.cpf.assign(rows, 0.5);
    for (size_t r = 0; r < rows; ++r) {
      if (n_total[r] > 0.0) {
        fragment.cpf[r] = (n_true[r] + pseudocount) / (n_total[r] + 2.0 * pseudocount);
      }
    }
    fragment.ApplyOverride();
  }
  return fragments;
}

// ---------------------------------------------------------------------------
// Grounding

size_t GroundNetwork::Add(GroundVariable variable) {
  if (index_.contains(variable.name)) throw Error("duplicate ground variable " + variable.name);
  size_t i = variables_.size();
  index_.emplace(variable.name, i);
  variables_.push_back(std::move(variable));
  return i;
}

std::optional<size_t> GroundNetwork::Index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t GroundNetwork::IndexOrThrow(std::string_view name) const {
  std::optional<size_t> i = Index(name);
  if (!i) throw Error("unknown variable " + std::string(name));
  return *i;
}

std::vector<size_t> GroundNetwork::AuxiliaryVariables() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].auxiliary) out.push_back(i);
  }
  return out;
}

void GroundNetwork::Finalize() {
  const size_t n = variables_.size();
  std::vector<size_t> indegree(n, 0);
  std::vector<std::vector<size_t>> children(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& v = variables_[i];
    if (v.cpf.size() != (size_t{1} << v.parents.size())) {
      throw Error("variable " + v.name + " has a malformed CPF");
    }
    for (size_t p : v.parents) {
      children[p].push_back(i);
      ++indegree[i];
    }
  }
  order_.clear();
  std::vector<size_t> ready;
  for (size_t i = n; i-- > 0;) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    size_t i = ready.back();
    ready.pop_back();
    order_.push_back(i);
    for (size_t c : children[i]) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  if (order_.size() == n) return;
  // Walk parent links inside the stuck set until a variable repeats.
  size_t at = 0;
  while (indegree[at] == 0) ++at;
  std::vector<size_t> path;
  std::vector<int> seen_at(n, -1);
  while (seen_at[at] < 0) {
    seen_at[at] = static_cast<int>(path.size());
    path.push_back(at);
    for (size_t p : variables_[at].parents) {
      if (indegree[p] > 0) {
        at = p;
        break;
      }
    }
  }
  std::vector<std::string> cycle;
  for (size_t k = static_cast<size_t>(seen_at[at]); k < path.size(); ++k) {
    cycle.push_back(variables_[path[k]].name);
  }
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(cycle.front());
  throw CycleError("ground network is cyclic", cycle);
}

GroundNetwork Ground(const Declaration& declaration, const std::vector<Fragment>& fragments,
                     const std::vector<std::string>& objects,
                     const std::vector<LogicConstraint>& constraints) {
  if (objects.empty()) throw ConfigError("grounding needs at least one object");
  declaration.Validate();
  GroundNetwork net;
  // Variables first so parents resolve regardless of fragment order.
  std::vector<std::pair<const Fragment*, size_t>> pending;
  for (const auto& object : objects) {
    for (const auto& fragment : fragments) {
      if (declaration.FindSignature(fragment.child.predicate) == nullptr) {
        throw Error("no signature for " + FormatAtom(fragment.child));
      }
      Atom atom = Substitute(fragment.child, object);
      std::string name = FormatAtom(atom);
      if (net.Index(name)) continue;  // object-free fragment already grounded
      size_t i = net.Add({name, atom, {}, fragment.cpf, false});
      pending.emplace_back(&fragment, i);
    }
  }
  // Parents are resolved against the object the child was grounded for.
  GroundNetwork out;
  std::vector<GroundVariable> vars = net.variables();
  for (auto& [fragment, i] : pending) {
    const std::string& object = vars[i].atom.subject;
    for (const auto& parent : fragment->parents) {
      std::string name = FormatAtom(Substitute(parent, object));
      std::optional<size_t> p = net.Index(name);
      if (!p) throw Error("parent " + name + " of " + vars[i].name + " has no fragment");
      vars[i].parents.push_back(*p);
    }
  }
  for (auto& v : vars) out.Add(std::move(v));
  size_t k = 0;
  for (const auto& constraint : constraints) {
    ++k;
    bool has_meta = false;
    std::vector<Atom> abstract_atoms;
    CollectAtoms(constraint.formula, abstract_atoms);
    for (const auto& a : abstract_atoms) has_meta = has_meta || a.subject == kMetaVariable;
    std::vector<std::string> targets = has_meta ? objects : std::vector<std::string>{""};
    for (const auto& object : targets) {
      Formula grounded =
          has_meta ? SubstituteFormula(constraint.formula, object) : constraint.formula;
      std::vector<Atom> atoms;
      CollectAtoms(grounded, atoms);
      GroundVariable aux;
      aux.name = "constraint" + std::to_string(k) + (has_meta ? "(" + object + ")" : "");
      aux.auxiliary = true;
      for (const auto& a : atoms) {
        std::optional<size_t> p = out.Index(FormatAtom(a));
        if (!p) throw Error("constraint atom " + FormatAtom(a) + " is not a network variable");
        aux.parents.push_back(*p);
      }
      aux.cpf.resize(size_t{1} << atoms.size());
      for (size_t row = 0; row < aux.cpf.size(); ++row) {
        aux.cpf[row] = Evaluate(grounded, atoms, row) ? 1.0 : 0.0;
      }
      out.Add(std::move(aux));
    }
  }
  out.Finalize();
  return out;
}

}  // namespace sitnet
