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

#ifndef SITNET_NETGEN_H_
#define SITNET_NETGEN_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sitnet/disambiguation.h"
#include "sitnet/edges.h"
#include "sitnet/lexicon.h"
#include "sitnet/relatedness.h"

namespace sitnet {

enum class NodeKind { kConcept, kProperty, kLocation, kAffordance };

std::string_view NodeKindName(NodeKind kind);
std::optional<NodeKind> ParseNodeKind(std::string_view name);

// Kind of the destination node of a relation.
NodeKind TargetKind(Relation relation);

struct ConceptNode {
  std::string id;    // unique; concept nodes use the term itself
  std::string term;  // surface term used for relatedness and predicates
  NodeKind kind = NodeKind::kConcept;
  std::optional<SynsetId> synset;
  bool is_seed = false;
};

struct RelationEdge {
  std::string src;
  Relation relation = Relation::kIsA;
  std::string dst;
  double strength = 1.0;
};

// The situated concept network. Nodes are keyed by id; edges are unique per
// (relation, src, dst) and kept in that order.
class ConceptGraph {
 public:
  using EdgeKey = std::tuple<Relation, std::string, std::string>;

  // Id for a node of `kind` named `term`: the term for concepts, otherwise
  // "<kind>:<term>".
  static std::string NodeId(NodeKind kind, std::string_view term);

  const ConceptNode* Find(std::string_view id) const;
  ConceptNode& AddNode(ConceptNode node);
  // Adds or strengthens an edge; keeps the larger strength on duplicates.
  void AddEdge(std::string_view src, Relation relation, std::string_view dst, double strength);
  bool HasEdge(Relation relation, std::string_view src, std::string_view dst) const;
  // Removes the node and every incident edge.
  void RemoveNode(std::string_view id);
  void RemoveEdge(Relation relation, std::string_view src, std::string_view dst);

  // IsA neighbours, sorted by id.
  std::vector<std::string> Parents(std::string_view id) const;
  std::vector<std::string> Children(std::string_view id) const;

  // Drops every node that no seed reaches along edges. Returns the count.
  size_t RemoveOrphans();

  // Throws Error describing the first violated invariant.
  void Validate() const;

  std::vector<RelationEdge> Edges() const;
  size_t edge_count() const { return edges_.size(); }
  const std::map<std::string, ConceptNode>& nodes() const { return nodes_; }
  std::vector<std::string> SeedIds() const;

  const std::string& environment() const { return environment_; }
  void set_environment(std::string env) { environment_ = std::move(env); }

  // NODE/EDGE records, nodes by id then edges by (relation, src, dst).
  void Write(std::ostream& out) const;
  static ConceptGraph Read(std::istream& in);

  friend bool operator==(const ConceptGraph& a, const ConceptGraph& b);

 private:
  std::map<std::string, ConceptNode> nodes_;
  std::map<EdgeKey, double> edges_;
  std::string environment_;
};

// Concept nodes for each seed sense and all of its hypernym ancestors, with
// child -> parent IsA edges of strength 1.
ConceptGraph AddIsaPaths(const SenseAssignment& assignment, const Lexicon& lexicon);

struct CompressOptions {
  int min_children = 2;
  double ic_threshold = 5.0;
  std::set<std::string> blocklist = {"entity", "abstraction", "physical_entity"};
};

// Hierarchy compression, repeated until a pass changes nothing:
//   1. drop non-seed concepts that are top-level (IC below threshold, or
//      blocklisted), linking their children to their parents;
//   2. from the leaves up, drop non-seed, non-root concepts with fewer than
//      min_children children;
//   3. drop a non-seed child whose name occurs, token-aligned, in its
//      parent's name.
ConceptGraph Compress(const ConceptGraph& graph, const CorpusFrequencies& freq,
                      const CompressOptions& options);

// True if the underscore tokens of `child` appear contiguously in `parent`.
bool NameContained(std::string_view child, std::string_view parent);

struct AttachStats {
  size_t considered = 0;
  size_t added = 0;
  size_t dropped_unknown_term = 0;
  size_t dropped_start_sense = 0;
  size_t dropped_end_sense = 0;
};

// Attaches UsedFor/HasProperty/AtLocation edges that start at a concept
// node's term. The target sense is chosen against the start term; edges whose
// start sense disagrees with the seed assignment are dropped. Strength is the
// normalized edge weight.
ConceptGraph AttachRelations(const ConceptGraph& graph, const EdgeStore& store,
                             const Lexicon& lexicon, const RelatednessProvider& provider,
                             const SenseAssignment& assignment, const StopwordSet& stopwords,
                             AttachStats* stats = nullptr);

// Extends every location reached so far by one more AtLocation hop, then
// keeps only locations that are the environment or are stored as located in
// it. Hop-two strength is the product of the two normalized weights.
ConceptGraph AttachLocationsTwoHop(const ConceptGraph& graph, const EdgeStore& store,
                                   std::string_view environment);

// True if `location` is the environment or the store places it there.
bool InEnvironment(const EdgeStore& store, std::string_view location, std::string_view environment);

}  // namespace sitnet

#endif  // SITNET_NETGEN_H_
