#include "posetdist/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "posetdist/error.hpp"

namespace posetdist {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::NotWeaklyConnected: return "NotWeaklyConnected";
    case ErrorCode::DegeneratePoset: return "DegeneratePoset";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::NotTransitivelyClosed: return "NotTransitivelyClosed";
    case ErrorCode::LabelClassNotPath: return "LabelClassNotPath";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::PairNotTwisted: return "PairNotTwisted";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::TimeLimitExceeded: return "TimeLimitExceeded";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::SolverDisagreement: return "SolverDisagreement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// LabeledDigraph

NodeIndex LabeledDigraph::add_node(std::string id, std::string label) {
  if (index_.contains(id)) {
    throw Error(ErrorCode::DuplicateNode, "duplicate node id '" + id + "'");
  }
  const NodeIndex v = ids_.size();
  index_.emplace(id, v);
  ids_.push_back(std::move(id));
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

bool LabeledDigraph::add_edge(NodeIndex tail, NodeIndex head, std::string edge_label) {
  if (tail >= ids_.size() || head >= ids_.size()) {
    throw Error(ErrorCode::UnknownNode, "edge endpoint out of range");
  }
  const auto [it, inserted] = edge_lookup_.emplace(key(tail, head), edges_.size());
  if (!inserted) return false;
  edges_.push_back({tail, head});
  edge_labels_.push_back(std::move(edge_label));
  out_[tail].push_back(head);
  in_[head].push_back(tail);
  return true;
}

bool LabeledDigraph::add_edge(std::string_view tail_id, std::string_view head_id,
                              std::string edge_label) {
  return add_edge(index_of(tail_id), index_of(head_id), std::move(edge_label));
}

std::optional<NodeIndex> LabeledDigraph::find(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex LabeledDigraph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::UnknownNode, "unknown node id '" + std::string(id) + "'");
}

bool LabeledDigraph::has_edge(NodeIndex tail, NodeIndex head) const {
  return edge_lookup_.contains(key(tail, head));
}

std::optional<std::size_t> LabeledDigraph::edge_index(NodeIndex tail, NodeIndex head) const {
  const auto it = edge_lookup_.find(key(tail, head));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

bool LabeledDigraph::has_edge_labels() const noexcept {
  return std::any_of(edge_labels_.begin(), edge_labels_.end(),
                     [](const std::string& s) { return !s.empty(); });
}

// ---------------------------------------------------------------------------
// UndirectedGraph

NodeIndex UndirectedGraph::add_node(std::string id) {
  if (index_.contains(id)) {
    throw Error(ErrorCode::DuplicateNode, "duplicate node id '" + id + "'");
  }
  const NodeIndex v = ids_.size();
  index_.emplace(id, v);
  ids_.push_back(std::move(id));
  adj_.emplace_back();
  return v;
}

bool UndirectedGraph::add_edge(NodeIndex a, NodeIndex b) {
  if (a >= ids_.size() || b >= ids_.size()) {
    throw Error(ErrorCode::UnknownNode, "edge endpoint out of range");
  }
  if (a == b) throw Error(ErrorCode::NotSimple, "self-loop on '" + ids_[a] + "'");
  if (a > b) std::swap(a, b);
  const std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | b;
  if (!edge_lookup_.emplace(k, edges_.size()).second) return false;
  edges_.push_back({a, b});
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  return true;
}

std::optional<NodeIndex> UndirectedGraph::find(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool UndirectedGraph::has_edge(NodeIndex a, NodeIndex b) const {
  if (a > b) std::swap(a, b);
  return edge_lookup_.contains((static_cast<std::uint64_t>(a) << 32) | b);
}

// ---------------------------------------------------------------------------
// Predicates

bool is_weakly_connected(const LabeledDigraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    auto visit = [&](NodeIndex w) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    };
    for (NodeIndex w : g.out_neighbors(v)) visit(w);
    for (NodeIndex w : g.in_neighbors(v)) visit(w);
  }
  return count == n;
}

bool is_simple(const LabeledDigraph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [](const Edge& e) { return e.tail == e.head; });
}

bool is_oriented(const LabeledDigraph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return e.tail != e.head && g.has_edge(e.head, e.tail);
  });
}

namespace {

// Kahn's method restricted to `members` (all nodes when empty). Returns the
// order; a result shorter than the member count means a cycle.
std::vector<NodeIndex> kahn(const LabeledDigraph& g, const std::vector<bool>* members) {
  const std::size_t n = g.node_count();
  auto in_set = [&](NodeIndex v) { return members == nullptr || (*members)[v]; };
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& e : g.edges()) {
    if (in_set(e.tail) && in_set(e.head)) ++indegree[e.head];
  }
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex v = 0; v < n; ++v) {
    if (in_set(v) && indegree[v] == 0) ready.push(v);
  }
  std::vector<NodeIndex> order;
  while (!ready.empty()) {
    const NodeIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeIndex w : g.out_neighbors(v)) {
      if (in_set(w) && --indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

}  // namespace

bool is_acyclic(const LabeledDigraph& g) { return kahn(g, nullptr).size() == g.node_count(); }

bool is_transitively_closed(const LabeledDigraph& g) {
  for (const Edge& e : g.edges()) {
    for (NodeIndex w : g.out_neighbors(e.head)) {
      if (!g.has_edge(e.tail, w)) return false;
    }
  }
  return true;
}

bool has_label_paths(const LabeledDigraph& g) {
  std::map<std::string, std::vector<NodeIndex>, std::less<>> classes;
  for (NodeIndex v = 0; v < g.node_count(); ++v) classes[g.label(v)].push_back(v);
  for (const auto& [label, nodes] : classes) {
    if (nodes.size() == 1) continue;
    std::vector<bool> members(g.node_count(), false);
    for (NodeIndex v : nodes) members[v] = true;
    const auto order = kahn(g, &members);
    if (order.size() != nodes.size()) return false;
    // The class is a chain iff each topological successor is reachable
    // inside the class; then the reduction is exactly that path.
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      std::vector<bool> seen(g.node_count(), false);
      std::vector<NodeIndex> stack{order[i]};
      bool found = false;
      while (!stack.empty() && !found) {
        const NodeIndex v = stack.back();
        stack.pop_back();
        for (NodeIndex w : g.out_neighbors(v)) {
          if (!members[w] || seen[w]) continue;
          if (w == order[i + 1]) {
            found = true;
            break;
          }
          seen[w] = true;
          stack.push_back(w);
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

PropertyReport validate_properties(const LabeledDigraph& g) {
  PropertyReport r;
  r.is_weakly_connected = is_weakly_connected(g);
  r.is_simple = is_simple(g);
  r.is_oriented = is_oriented(g);
  r.is_acyclic = is_acyclic(g);
  r.is_transitively_closed = is_transitively_closed(g);
  r.per_label_path = has_label_paths(g);
  return r;
}

void require_wso(const LabeledDigraph& g, std::string_view what) {
  std::string failed;
  if (!is_weakly_connected(g)) failed = "weakly connected";
  else if (!is_simple(g)) failed = "simple";
  else if (!is_oriented(g)) failed = "oriented";
  if (!failed.empty()) {
    throw Error(ErrorCode::PropertyViolation,
                std::string(what) + " is not " + failed);
  }
}

// ---------------------------------------------------------------------------
// Posets

PosetDigraph PosetDigraph::from_graph(LabeledDigraph g) {
  if (!is_simple(g)) throw Error(ErrorCode::NotSimple, "poset digraph has a self-loop");
  if (!is_oriented(g)) {
    throw Error(ErrorCode::AntisymmetryViolation, "poset digraph has a 2-cycle");
  }
  if (!is_acyclic(g)) throw Error(ErrorCode::CycleDetected, "poset digraph has a cycle");
  if (!is_transitively_closed(g)) {
    throw Error(ErrorCode::NotTransitivelyClosed, "poset digraph is not transitively closed");
  }
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::DegeneratePoset, "poset digraph has no edges");
  }
  if (!is_weakly_connected(g)) {
    throw Error(ErrorCode::NotWeaklyConnected, "poset digraph is not weakly connected");
  }
  return PosetDigraph(std::move(g));
}

PosetDigraph build_poset_digraph(
    const std::vector<PosetElement>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  LabeledDigraph raw;
  for (const auto& e : elements) raw.add_node(e.id, e.label);
  for (const auto& [p, q] : relations) {
    const NodeIndex a = raw.index_of(p);
    const NodeIndex b = raw.index_of(q);
    if (a != b) raw.add_edge(a, b);
  }
  // Closure over the raw relation; any pair related both ways breaks
  // antisymmetry (this also catches longer cycles).
  const auto reach = reachability(raw);
  const std::size_t n = raw.node_count();
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      if (reach[a][b] && reach[b][a]) {
        throw Error(ErrorCode::AntisymmetryViolation,
                    "elements '" + raw.id(a) + "' and '" + raw.id(b) +
                        "' are related in both directions");
      }
    }
  }
  LabeledDigraph closed;
  for (const auto& e : elements) closed.add_node(e.id, e.label);
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = 0; b < n; ++b) {
      if (a != b && reach[a][b]) closed.add_edge(a, b);
    }
  }
  if (closed.edge_count() == 0) {
    throw Error(ErrorCode::DegeneratePoset, "poset has no strict relations");
  }
  if (!is_weakly_connected(closed)) {
    throw Error(ErrorCode::NotWeaklyConnected, "poset digraph is not weakly connected");
  }
  return PosetDigraph::from_graph(std::move(closed));
}

// ---------------------------------------------------------------------------
// Derived graphs

UndirectedGraph structure(const LabeledDigraph& g) {
  UndirectedGraph s;
  for (NodeIndex v = 0; v < g.node_count(); ++v) s.add_node(g.id(v));
  for (const Edge& e : g.edges()) {
    if (e.tail != e.head) s.add_edge(e.tail, e.head);
  }
  return s;
}

UndirectedGraph line_graph(const UndirectedGraph& g) {
  UndirectedGraph l;
  const auto& edges = g.edges();
  for (const Edge& e : edges) l.add_node("{" + g.id(e.tail) + "," + g.id(e.head) + "}");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head) {
        l.add_edge(i, j);
      }
    }
  }
  return l;
}

std::vector<NodeIndex> predecessors(const LabeledDigraph& g, NodeIndex v) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeIndex> stack{v};
  while (!stack.empty()) {
    const NodeIndex w = stack.back();
    stack.pop_back();
    for (NodeIndex u : g.in_neighbors(w)) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::vector<NodeIndex> out;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    if (seen[u] && u != v) out.push_back(u);
  }
  return out;
}

std::vector<NodeIndex> topological_sort(const LabeledDigraph& g) {
  auto order = kahn(g, nullptr);
  if (order.size() != g.node_count()) {
    throw Error(ErrorCode::CycleDetected, "graph contains a directed cycle");
  }
  return order;
}

std::vector<std::vector<bool>> reachability(const LabeledDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (NodeIndex s = 0; s < n; ++s) {
    std::vector<NodeIndex> stack(g.out_neighbors(s).begin(), g.out_neighbors(s).end());
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (NodeIndex w : g.out_neighbors(v)) {
        if (!reach[s][w]) stack.push_back(w);
      }
    }
  }
  return reach;
}

namespace {

LabeledDigraph copy_nodes(const LabeledDigraph& g) {
  LabeledDigraph out;
  for (NodeIndex v = 0; v < g.node_count(); ++v) out.add_node(g.id(v), g.label(v));
  return out;
}

}  // namespace

LabeledDigraph transitive_closure(const LabeledDigraph& g) {
  if (!is_acyclic(g)) throw Error(ErrorCode::CycleDetected, "closure requires an acyclic graph");
  const auto reach = reachability(g);
  LabeledDigraph out = copy_nodes(g);
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (reach[u][v]) out.add_edge(u, v);
    }
  }
  return out;
}

LabeledDigraph transitive_reduction(const LabeledDigraph& g) {
  if (!is_acyclic(g)) throw Error(ErrorCode::CycleDetected, "reduction requires an acyclic graph");
  const auto reach = reachability(g);
  LabeledDigraph out = copy_nodes(g);
  const std::size_t n = g.node_count();
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      bool implied = false;
      for (NodeIndex w : g.out_neighbors(u)) {
        if (w != v && reach[w][v]) {
          implied = true;
          break;
        }
      }
      if (!implied) out.add_edge(u, v);
    }
  }
  return out;
}

LabeledDigraph node_induced_subgraph(const LabeledDigraph& g, std::span<const NodeIndex> nodes) {
  LabeledDigraph out;
  std::vector<std::optional<NodeIndex>> remap(g.node_count());
  for (NodeIndex v : nodes) remap[v] = out.add_node(g.id(v), g.label(v));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (remap[e.tail] && remap[e.head]) out.add_edge(*remap[e.tail], *remap[e.head], g.edge_label(i));
  }
  return out;
}

LabeledDigraph edge_induced_subgraph(const LabeledDigraph& g,
                                     std::span<const std::size_t> edge_indices) {
  LabeledDigraph out;
  std::vector<std::optional<NodeIndex>> remap(g.node_count());
  auto touch = [&](NodeIndex v) {
    if (!remap[v]) remap[v] = out.add_node(g.id(v), g.label(v));
    return *remap[v];
  };
  for (std::size_t i : edge_indices) {
    const Edge& e = g.edges().at(i);
    const NodeIndex a = touch(e.tail);
    const NodeIndex b = touch(e.head);
    out.add_edge(a, b, g.edge_label(i));
  }
  return out;
}

}  // namespace posetdist
