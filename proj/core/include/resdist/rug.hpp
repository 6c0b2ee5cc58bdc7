#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace resdist {

/// One resource theory: either an explicit finite free set (inclusions are
/// derived by subset testing) or an opaque tag used only with declared
/// inclusion edges.
struct ResourceNode {
  std::string name;
  std::optional<std::set<std::string>> free_set;
};

/// Parsed graph document:
///   {"root": name,
///    "resources": [{"name": str, "free_set": [ids] | null}, ...],
///    "inclusions": [[parent, child], ...]}
/// Set ids may be strings or integers. Explicit sets and declared
/// inclusions may be mixed; declared edges are validated against explicit
/// sets when both endpoints carry one.
struct GraphDocument {
  std::string root;
  std::vector<ResourceNode> resources;
  std::vector<std::pair<std::string, std::string>> inclusions;
};

/// Throws ParseError on malformed JSON or schema violations.
GraphDocument parse_graph_document(const std::string& json_text);

/// Residual use graph: a transitively closed DAG over resource theories
/// whose edges follow strict free-set inclusion, parent -> child.
class RugGraph {
 public:
  /// Builds the graph: derives edges from explicit free sets (proper
  /// inclusion only), merges declared inclusions, applies the transitive
  /// closure and rejects cycles. Equal explicit free sets are rejected as a
  /// cycle (the two theories would coincide). Duplicate names and declared
  /// edges contradicting explicit sets raise ValidationError.
  static RugGraph build(const GraphDocument& doc);

  /// Wraps an arbitrary directed graph without inclusion semantics, closure
  /// or acyclicity checks. Intended for tests and ad-hoc analyses.
  static RugGraph from_edges(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& edges, int root);

  int size() const { return static_cast<int>(nodes_.size()); }
  const ResourceNode& node(int i) const { return nodes_[i]; }
  const std::string& name(int i) const { return nodes_[i].name; }
  int root() const { return root_; }
  bool edge(int from, int to) const { return adj_[from][to] != 0; }
  std::vector<std::pair<int, int>> edges() const;

  /// Index of a node name, or -1.
  int index_of(const std::string& name) const;

 private:
  std::vector<ResourceNode> nodes_;
  std::vector<std::vector<char>> adj_;
  int root_ = 0;
};

/// Longest directed path length from the root to every node, computed by a
/// topological-order dynamic program. Nodes unreachable from the root get
/// nullopt.
std::vector<std::optional<int>> levels(const RugGraph& g);

/// Chordality of the undirected companion graph (edge directions erased),
/// via maximum cardinality search and the perfect-elimination check.
struct ChordalityResult {
  bool chordal = false;
  std::vector<int> elimination_order;  // on success
  std::vector<int> chordless_cycle;    // on failure: a cycle of length >= 4
};
ChordalityResult is_chordal_urug(const RugGraph& g);

/// All directed paths starting at the root, in lexicographic node-name
/// order, with at most max_len nodes each. The single-node path [root] is
/// included.
std::vector<std::vector<int>> enumerate_paths(const RugGraph& g, int max_len);

}  // namespace resdist
