#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posetdist {

// Dense position of a node in insertion order. All deterministic tie-breaks
// in the library ("smallest id") compare these indices.
using NodeIndex = std::size_t;

struct Edge {
  NodeIndex tail = 0;
  NodeIndex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed graph with string node ids, string node labels and
/// optional string edge labels. Edges form a set; insertion order is kept
/// for deterministic iteration. Self-loops are representable so that
/// `validate_properties` can report them.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;

  /// Throws Error(DuplicateNode) if `id` already exists.
  NodeIndex add_node(std::string id, std::string label);

  /// Returns false (and leaves the graph unchanged) if the edge exists.
  bool add_edge(NodeIndex tail, NodeIndex head, std::string edge_label = {});
  bool add_edge(std::string_view tail_id, std::string_view head_id, std::string edge_label = {});

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  const std::string& id(NodeIndex v) const { return ids_.at(v); }
  const std::string& label(NodeIndex v) const { return labels_.at(v); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws Error(UnknownNode).
  NodeIndex index_of(std::string_view id) const;

  bool has_edge(NodeIndex tail, NodeIndex head) const;
  std::optional<std::size_t> edge_index(NodeIndex tail, NodeIndex head) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& edge_label(std::size_t edge) const { return edge_labels_.at(edge); }
  bool has_edge_labels() const noexcept;

  std::span<const NodeIndex> out_neighbors(NodeIndex v) const { return out_.at(v); }
  std::span<const NodeIndex> in_neighbors(NodeIndex v) const { return in_.at(v); }

 private:
  static std::uint64_t key(NodeIndex tail, NodeIndex head) {
    return (static_cast<std::uint64_t>(tail) << 32) | static_cast<std::uint64_t>(head);
  }

  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  std::map<std::string, NodeIndex, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::string> edge_labels_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<std::vector<NodeIndex>> out_;
  std::vector<std::vector<NodeIndex>> in_;
};

/// Unlabeled undirected simple graph. Edges are stored with the smaller
/// index first.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  NodeIndex add_node(std::string id);
  /// Self-loops are rejected with Error(NotSimple); duplicates return false.
  bool add_edge(NodeIndex a, NodeIndex b);

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& id(NodeIndex v) const { return ids_.at(v); }
  std::optional<NodeIndex> find(std::string_view id) const;

  bool has_edge(NodeIndex a, NodeIndex b) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const NodeIndex> neighbors(NodeIndex v) const { return adj_.at(v); }
  std::size_t degree(NodeIndex v) const { return adj_.at(v).size(); }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, NodeIndex, std::less<>> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<std::vector<NodeIndex>> adj_;
};

struct PropertyReport {
  bool is_finite = true;
  bool is_weakly_connected = false;
  bool is_simple = false;
  bool is_oriented = false;
  bool is_acyclic = false;
  bool is_transitively_closed = false;
  // Every label class is a chain: its node-induced subgraph is acyclic and
  // its transitive reduction is a single directed path.
  bool per_label_path = false;

  bool wso() const noexcept { return is_weakly_connected && is_simple && is_oriented; }
};

PropertyReport validate_properties(const LabeledDigraph& g);

bool is_weakly_connected(const LabeledDigraph& g);
bool is_simple(const LabeledDigraph& g);
bool is_oriented(const LabeledDigraph& g);
bool is_acyclic(const LabeledDigraph& g);
bool is_transitively_closed(const LabeledDigraph& g);
bool has_label_paths(const LabeledDigraph& g);

/// Throws Error(PropertyViolation) naming the first failed assumption.
void require_wso(const LabeledDigraph& g, std::string_view what);

/// Digraph of a labeled partial order: weakly connected, simple, oriented,
/// acyclic, transitively closed, with at least one edge.
class PosetDigraph {
 public:
  /// Validates an existing graph. Throws Error with the violated property.
  static PosetDigraph from_graph(LabeledDigraph g);

  const LabeledDigraph& graph() const noexcept { return graph_; }
  operator const LabeledDigraph&() const noexcept { return graph_; }

 private:
  explicit PosetDigraph(LabeledDigraph g) : graph_(std::move(g)) {}
  LabeledDigraph graph_;
};

struct PosetElement {
  std::string id;
  std::string label;
};

/// `relations` holds pairs (p, q) meaning p <= q. Reflexive pairs are
/// dropped and the relation is transitively completed.
PosetDigraph build_poset_digraph(const std::vector<PosetElement>& elements,
                                 const std::vector<std::pair<std::string, std::string>>& relations);

struct PosetSpec {
  std::vector<PosetElement> elements;
  std::vector<std::pair<std::string, std::string>> relations;
};

inline PosetDigraph build_poset_digraph(const PosetSpec& spec) {
  return build_poset_digraph(spec.elements, spec.relations);
}

UndirectedGraph structure(const LabeledDigraph& g);
UndirectedGraph line_graph(const UndirectedGraph& g);

/// All nodes with a directed path to `v` (excluding `v`), ascending.
std::vector<NodeIndex> predecessors(const LabeledDigraph& g, NodeIndex v);

/// Kahn's method, smallest index first. Throws Error(CycleDetected).
std::vector<NodeIndex> topological_sort(const LabeledDigraph& g);

/// reach[u][v] is true iff a non-empty directed path u ~> v exists.
std::vector<std::vector<bool>> reachability(const LabeledDigraph& g);

/// Both throw Error(CycleDetected). Node order and labels are preserved;
/// edges are emitted in (tail, head) index order.
LabeledDigraph transitive_closure(const LabeledDigraph& g);
LabeledDigraph transitive_reduction(const LabeledDigraph& g);

/// Subgraph induced by `nodes` (kept in the given order), with edge labels.
LabeledDigraph node_induced_subgraph(const LabeledDigraph& g, std::span<const NodeIndex> nodes);
/// Subgraph induced by the edges at `edge_indices`; nodes appear in the
/// order they are first touched.
LabeledDigraph edge_induced_subgraph(const LabeledDigraph& g, std::span<const std::size_t> edge_indices);

}  // namespace posetdist
