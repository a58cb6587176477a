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

#include "sitnet/netgen.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "sitnet/error.h"

namespace sitnet {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kConcept:
      return "concept";
    case NodeKind::kProperty:
      return "property";
    case NodeKind::kLocation:
      return "location";
    case NodeKind::kAffordance:
      return "affordance";
  }
  return "?";
}

std::optional<NodeKind> ParseNodeKind(std::string_view name) {
  for (NodeKind k :
       {NodeKind::kConcept, NodeKind::kProperty, NodeKind::kLocation, NodeKind::kAffordance}) {
    if (NodeKindName(k) == name) return k;
  }
  return std::nullopt;
}

NodeKind TargetKind(Relation relation) {
  switch (relation) {
    case Relation::kIsA:
      return NodeKind::kConcept;
    case Relation::kAtLocation:
      return NodeKind::kLocation;
    case Relation::kHasProperty:
      return NodeKind::kProperty;
    case Relation::kUsedFor:
      return NodeKind::kAffordance;
  }
  return NodeKind::kConcept;
}

// ---------------------------------------------------------------------------
// ConceptGraph

std::string ConceptGraph::NodeId(NodeKind kind, std::string_view term) {
  if (kind == NodeKind::kConcept) return std::string(term);
  return std::string(NodeKindName(kind)) + ":" + std::string(term);
}

const ConceptNode* ConceptGraph::Find(std::string_view id) const {
  auto it = nodes_.find(std::string(id));
  return it == nodes_.end() ? nullptr : &it->second;
}

ConceptNode& ConceptGraph::AddNode(ConceptNode node) {
  auto [it, inserted] = nodes_.try_emplace(node.id, node);
  return it->second;
}

void ConceptGraph::AddEdge(std::string_view src, Relation relation, std::string_view dst,
                           double strength) {
  if (src == dst) return;
  EdgeKey key{relation, std::string(src), std::string(dst)};
  auto [it, inserted] = edges_.try_emplace(std::move(key), strength);
  if (!inserted) it->second = std::max(it->second, strength);
}

bool ConceptGraph::HasEdge(Relation relation, std::string_view src, std::string_view dst) const {
  return edges_.contains({relation, std::string(src), std::string(dst)});
}

void ConceptGraph::RemoveEdge(Relation relation, std::string_view src, std::string_view dst) {
  edges_.erase({relation, std::string(src), std::string(dst)});
}

void ConceptGraph::RemoveNode(std::string_view id) {
  nodes_.erase(std::string(id));
  std::erase_if(edges_, [&](const auto& entry) {
    return std::get<1>(entry.first) == id || std::get<2>(entry.first) == id;
  });
}

std::vector<std::string> ConceptGraph::Parents(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& [key, strength] : edges_) {
    if (std::get<0>(key) == Relation::kIsA && std::get<1>(key) == id) {
      out.push_back(std::get<2>(key));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ConceptGraph::Children(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& [key, strength] : edges_) {
    if (std::get<0>(key) == Relation::kIsA && std::get<2>(key) == id) {
      out.push_back(std::get<1>(key));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ConceptGraph::SeedIds() const {
  std::vector<std::string> out;
  for (const auto& [id, node] : nodes_) {
    if (node.is_seed) out.push_back(id);
  }
  return out;
}

std::vector<RelationEdge> ConceptGraph::Edges() const {
  std::vector<RelationEdge> out;
  out.reserve(edges_.size());
  for (const auto& [key, strength] : edges_) {
    out.push_back({std::get<1>(key), std::get<0>(key), std::get<2>(key), strength});
  }
  return out;
}

size_t ConceptGraph::RemoveOrphans() {
  std::unordered_map<std::string, std::vector<std::string>> out_edges;
  for (const auto& [key, strength] : edges_) {
    out_edges[std::get<1>(key)].push_back(std::get<2>(key));
  }
  std::set<std::string> reached;
  std::deque<std::string> queue;
  for (const auto& id : SeedIds()) {
    reached.insert(id);
    queue.push_back(id);
  }
  while (!queue.empty()) {
    std::string id = std::move(queue.front());
    queue.pop_front();
    for (const auto& next : out_edges[id]) {
      if (reached.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::string> orphans;
  for (const auto& [id, node] : nodes_) {
    if (!reached.contains(id)) orphans.push_back(id);
  }
  for (const auto& id : orphans) RemoveNode(id);
  return orphans.size();
}

void ConceptGraph::Validate() const {
  for (const auto& [key, strength] : edges_) {
    const auto& [relation, src, dst] = key;
    const ConceptNode* s = Find(src);
    const ConceptNode* d = Find(dst);
    std::string label = std::string(RelationName(relation)) + "(" + src + ", " + dst + ")";
    if (s == nullptr || d == nullptr) throw Error("dangling edge " + label);
    if (!(strength >= 0.0 && strength <= 1.0)) throw Error("strength out of range on " + label);
    if (d->kind != TargetKind(relation)) throw Error("wrong target kind on " + label);
    bool src_ok = s->kind == NodeKind::kConcept ||
                  (relation == Relation::kAtLocation && s->kind == NodeKind::kLocation);
    if (!src_ok) throw Error("wrong source kind on " + label);
    if (relation == Relation::kIsA && strength != 1.0) throw Error("IsA strength != 1 on " + label);
  }
  for (const auto& [id, node] : nodes_) {
    if (node.is_seed && node.kind != NodeKind::kConcept)
      throw Error("seed " + id + " is not a concept");
  }
  // The whole graph (IsA plus location hops) must be acyclic.
  std::unordered_map<std::string, std::vector<std::string>> out_edges;
  for (const auto& [key, strength] : edges_) {
    out_edges[std::get<1>(key)].push_back(std::get<2>(key));
  }
  std::unordered_map<std::string, int> color;
  std::vector<std::string> path;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    color[id] = 1;
    path.push_back(id);
    for (const auto& next : out_edges[id]) {
      if (color[next] == 1) {
        auto from = std::find(path.begin(), path.end(), next);
        std::vector<std::string> cycle(from, path.end());
        cycle.push_back(next);
        throw CycleError("cyclic concept graph", cycle);
      }
      if (color[next] == 0) visit(next);
    }
    path.pop_back();
    color[id] = 2;
  };
  for (const auto& [id, node] : nodes_) {
    if (color[id] == 0) visit(id);
  }
  ConceptGraph copy = *this;
  if (copy.RemoveOrphans() != 0) throw Error("graph has nodes unreachable from seeds");
}

void ConceptGraph::Write(std::ostream& out) const {
  if (!environment_.empty()) out << "ENVIRONMENT\t" << environment_ << '\n';
  for (const auto& [id, node] : nodes_) {
    out << "NODE\t" << id << '\t' << NodeKindName(node.kind) << '\t' << node.synset.value_or("-")
        << '\t' << (node.is_seed ? 1 : 0) << '\n';
  }
  for (const auto& [key, strength] : edges_) {
    out << "EDGE\t" << RelationName(std::get<0>(key)) << '\t' << std::get<1>(key) << '\t'
        << std::get<2>(key) << '\t' << FormatDouble(strength) << '\n';
  }
}

namespace {

std::string TermFromId(std::string_view id) {
  size_t colon = id.find(':');
  if (colon != std::string_view::npos) id.remove_prefix(colon + 1);
  size_t hash = id.find('#');
  if (hash != std::string_view::npos) id = id.substr(0, hash);
  return std::string(id);
}

}  // namespace

ConceptGraph ConceptGraph::Read(std::istream& in) {
  ConceptGraph g;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f[0] == "ENVIRONMENT" && f.size() == 2) {
      g.environment_ = f[1];
    } else if (f[0] == "NODE" && f.size() == 5) {
      std::optional<NodeKind> kind = ParseNodeKind(f[2]);
      if (!kind) throw ParseError("graph", lineno, "unknown node kind " + f[2]);
      ConceptNode node{f[1], TermFromId(f[1]), *kind, std::nullopt, f[4] == "1"};
      if (f[3] != "-") node.synset = f[3];
      g.nodes_.emplace(node.id, std::move(node));
    } else if (f[0] == "EDGE" && f.size() == 5) {
      std::optional<Relation> relation = ParseRelation(f[1]);
      if (!relation) throw ParseError("graph", lineno, "unknown relation " + f[1]);
      g.edges_[{*relation, f[2], f[3]}] = std::stod(f[4]);
    } else {
      throw ParseError("graph", lineno, "unrecognized record");
    }
  }
  return g;
}

bool operator==(const ConceptGraph& a, const ConceptGraph& b) {
  if (a.environment_ != b.environment_ || a.edges_ != b.edges_ ||
      a.nodes_.size() != b.nodes_.size()) {
    return false;
  }
  for (const auto& [id, node] : a.nodes_) {
    const ConceptNode* other = b.Find(id);
    if (other == nullptr || other->term != node.term || other->kind != node.kind ||
        other->synset != node.synset || other->is_seed != node.is_seed) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// IsA extraction

ConceptGraph AddIsaPaths(const SenseAssignment& assignment, const Lexicon& lexicon) {
  ConceptGraph graph;
  std::map<SynsetId, std::string> node_of;
  auto claim = [&](const SynsetId& synset, std::string name, bool seed) {
    std::string id = name;
    const ConceptNode* existing = graph.Find(id);
    if (existing != nullptr && existing->synset != synset) {
      id = name + "#" + synset.substr(0, synset.find('-'));
    }
    graph.AddNode({id, name, NodeKind::kConcept, synset, seed});
    node_of.emplace(synset, id);
  };
  for (const auto& [word, choice] : assignment.choices) {
    if (node_of.contains(choice.sense)) continue;
    claim(choice.sense, word, true);
  }
  std::set<SynsetId> closure;
  for (const auto& [word, choice] : assignment.choices) {
    for (auto& id : lexicon.Ancestors(choice.sense)) closure.insert(std::move(id));
  }
  for (const auto& synset : closure) {
    if (node_of.contains(synset)) continue;
    claim(synset, NormalizeTerm(lexicon.Get(synset).lemmas.front()), false);
  }
  for (const auto& [synset, id] : node_of) {
    for (const auto& parent : lexicon.Get(synset).hypernyms) {
      graph.AddEdge(id, Relation::kIsA, node_of.at(parent), 1.0);
    }
  }
  return graph;
}

// ---------------------------------------------------------------------------
// Compression

bool NameContained(std::string_view child, std::string_view parent) {
  auto tokens = [](std::string_view s) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= s.size()) {
      size_t us = s.find('_', start);
      if (us == std::string_view::npos) us = s.size();
      if (us > start) out.push_back(s.substr(start, us - start));
      start = us + 1;
    }
    return out;
  };
  std::vector<std::string_view> c = tokens(child);
  std::vector<std::string_view> p = tokens(parent);
  if (c.empty() || c.size() > p.size()) return false;
  for (size_t i = 0; i + c.size() <= p.size(); ++i) {
    if (std::equal(c.begin(), c.end(), p.begin() + static_cast<std::ptrdiff_t>(i))) {
      return true;
    }
  }
  return false;
}

namespace {

std::vector<std::string> ConceptIds(const ConceptGraph& g) {
  std::vector<std::string> out;
  for (const auto& [id, node] : g.nodes()) {
    if (node.kind == NodeKind::kConcept) out.push_back(id);
  }
  return out;
}

// Removes `id`, linking each of its children to each of its parents.
void DeleteAndReconnect(ConceptGraph& g, const std::string& id) {
  std::vector<std::string> parents = g.Parents(id);
  std::vector<std::string> children = g.Children(id);
  g.RemoveNode(id);
  for (const auto& child : children) {
    for (const auto& parent : parents) g.AddEdge(child, Relation::kIsA, parent, 1.0);
  }
}

// A root whose removal would leave some seed without any ancestor.
bool StrandsSeed(const ConceptGraph& g, const std::string& id) {
  if (!g.Parents(id).empty()) return false;
  for (const auto& child : g.Children(id)) {
    if (g.Find(child)->is_seed && g.Parents(child).size() == 1) return true;
  }
  return false;
}

bool ApplyTopLevelRule(ConceptGraph& g, const CorpusFrequencies& freq,
                       const CompressOptions& options) {
  bool changed = false;
  for (const auto& id : ConceptIds(g)) {
    const ConceptNode* node = g.Find(id);
    if (node == nullptr || node->is_seed) continue;
    bool top_level = options.blocklist.contains(node->term) ||
                     InformationContent(node->term, freq) < options.ic_threshold;
    if (!top_level || StrandsSeed(g, id)) continue;
    DeleteAndReconnect(g, id);
    changed = true;
  }
  return changed;
}

// Longest distance to a leaf along IsA child links.
std::map<std::string, int> Heights(const ConceptGraph& g) {
  std::map<std::string, int> height;
  std::function<int(const std::string&)> visit = [&](const std::string& id) -> int {
    auto it = height.find(id);
    if (it != height.end()) return it->second;
    int h = 0;
    for (const auto& child : g.Children(id)) h = std::max(h, visit(child) + 1);
    height[id] = h;
    return h;
  };
  for (const auto& id : ConceptIds(g)) visit(id);
  return height;
}

bool ApplyFewChildrenRule(ConceptGraph& g, const CompressOptions& options) {
  std::map<std::string, int> height = Heights(g);
  std::vector<std::string> order = ConceptIds(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& a, const auto& b) { return height[a] < height[b]; });
  bool changed = false;
  for (const auto& id : order) {
    const ConceptNode* node = g.Find(id);
    if (node == nullptr || node->is_seed || g.Parents(id).empty()) continue;
    if (static_cast<int>(g.Children(id).size()) >= options.min_children) continue;
    DeleteAndReconnect(g, id);
    changed = true;
  }
  return changed;
}

bool ApplyNameRule(ConceptGraph& g) {
  bool changed = false;
  for (const auto& edge : g.Edges()) {
    if (edge.relation != Relation::kIsA || !g.HasEdge(Relation::kIsA, edge.src, edge.dst)) {
      continue;
    }
    const ConceptNode* child = g.Find(edge.src);
    const ConceptNode* parent = g.Find(edge.dst);
    if (child->is_seed || !NameContained(child->term, parent->term)) continue;
    DeleteAndReconnect(g, edge.src);
    changed = true;
  }
  return changed;
}

}  // namespace

ConceptGraph Compress(const ConceptGraph& graph, const CorpusFrequencies& freq,
                      const CompressOptions& options) {
  ConceptGraph g = graph;
  while (true) {
    // Rule 1 runs to its own fixpoint so newly exposed roots are removed
    // before rule 2 collapses the chains beneath them.
    bool changed = false;
    while (ApplyTopLevelRule(g, freq, options)) changed = true;
    changed = ApplyFewChildrenRule(g, options) || changed;
    changed = ApplyNameRule(g) || changed;
    if (!changed) break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Relation attachment

ConceptGraph AttachRelations(const ConceptGraph& graph, const EdgeStore& store,
                             const Lexicon& lexicon, const RelatednessProvider& provider,
                             const SenseAssignment& assignment, const StopwordSet& stopwords,
                             AttachStats* stats_out) {
  AttachStats stats;
  ConceptGraph g = graph;
  for (const auto& id : ConceptIds(graph)) {
    const ConceptNode& node = *graph.Find(id);
    std::optional<SynsetId> start_sense = node.synset;
    if (node.is_seed) {
      auto it = assignment.choices.find(node.term);
      if (it != assignment.choices.end()) start_sense = it->second.sense;
    }
    for (Relation relation : {Relation::kAtLocation, Relation::kHasProperty, Relation::kUsedFor}) {
      for (const ConceptEdge* edge : store.From(node.term, relation)) {
        ++stats.considered;
        if (edge->end == node.term) continue;
        if (edge->start_sense && start_sense && *edge->start_sense != *start_sense) {
          ++stats.dropped_start_sense;
          continue;
        }
        EdgeSense target;
        try {
          target = DisambiguateEdge(node.term, edge->end, lexicon, provider, stopwords);
        } catch (const UnknownTermError&) {
          ++stats.dropped_unknown_term;
          continue;
        }
        if (edge->end_sense && *edge->end_sense != target.sense) {
          ++stats.dropped_end_sense;
          continue;
        }
        NodeKind kind = TargetKind(relation);
        std::string dst = ConceptGraph::NodeId(kind, edge->end);
        g.AddNode({dst, edge->end, kind, target.sense, false});
        g.AddEdge(id, relation, dst, NormalizedWeight(*edge, store));
        ++stats.added;
      }
    }
  }
  if (stats_out != nullptr) *stats_out = stats;
  return g;
}

bool InEnvironment(const EdgeStore& store, std::string_view location,
                   std::string_view environment) {
  return location == environment || store.Contains(location, Relation::kAtLocation, environment);
}

namespace {

bool Reaches(const ConceptGraph& g, const std::string& from, const std::string& to) {
  std::set<std::string> seen{from};
  std::vector<std::string> pending{from};
  while (!pending.empty()) {
    std::string id = std::move(pending.back());
    pending.pop_back();
    if (id == to) return true;
    for (const auto& edge : g.Edges()) {
      if (edge.src == id && seen.insert(edge.dst).second) pending.push_back(edge.dst);
    }
  }
  return false;
}

}  // namespace

ConceptGraph AttachLocationsTwoHop(const ConceptGraph& graph, const EdgeStore& store,
                                   std::string_view environment) {
  ConceptGraph g = graph;
  g.set_environment(std::string(environment));
  // Strongest first-hop strength into each location.
  std::map<std::string, double> first_hop;
  for (const auto& edge : graph.Edges()) {
    if (edge.relation != Relation::kAtLocation) continue;
    if (graph.Find(edge.src)->kind != NodeKind::kConcept) continue;
    double& best = first_hop[edge.dst];
    best = std::max(best, edge.strength);
  }
  for (const auto& [loc_id, hop1] : first_hop) {
    const std::string term = graph.Find(loc_id)->term;
    for (const ConceptEdge* edge : store.From(term, Relation::kAtLocation)) {
      std::string dst = ConceptGraph::NodeId(NodeKind::kLocation, edge->end);
      if (dst == loc_id) continue;
      if (g.Find(dst) != nullptr && Reaches(g, dst, loc_id)) continue;
      g.AddNode({dst, edge->end, NodeKind::kLocation, edge->end_sense, false});
      g.AddEdge(loc_id, Relation::kAtLocation, dst, hop1 * NormalizedWeight(*edge, store));
    }
  }
  std::vector<std::string> pruned;
  for (const auto& [id, node] : g.nodes()) {
    if (node.kind == NodeKind::kLocation && !InEnvironment(store, node.term, environment)) {
      pruned.push_back(id);
    }
  }
  for (const auto& id : pruned) g.RemoveNode(id);
  g.RemoveOrphans();
  return g;
}

}  // namespace sitnet
