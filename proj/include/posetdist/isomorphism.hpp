#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "posetdist/graph.hpp"

namespace posetdist {

/// Total map between the node sets of two graphs: image[v] is the node of
/// the second graph assigned to node v of the first.
struct Bijection {
  std::vector<NodeIndex> image;

  std::vector<std::pair<NodeIndex, NodeIndex>> pairs() const;
  friend bool operator==(const Bijection&, const Bijection&) = default;
};

struct IsoOptions {
  bool match_edge_labels = true;
};

/// Exact backtracking search. Nodes of `g` are assigned in index order and
/// candidates tried in ascending index order, so the result is the
/// lexicographically smallest isomorphism. Candidates are filtered by a
/// joint color refinement of both graphs, which never excludes a valid map.
std::optional<Bijection> find_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h,
                                          IsoOptions options = {});
std::optional<Bijection> find_isomorphism(const UndirectedGraph& g, const UndirectedGraph& h);

using GraphRef = std::variant<std::reference_wrapper<const LabeledDigraph>,
                              std::reference_wrapper<const UndirectedGraph>>;

/// Throws Error(KindMismatch) when one graph is directed and the other not.
std::optional<Bijection> find_isomorphism(GraphRef g, GraphRef h, IsoOptions options = {});

inline bool is_isomorphic(const LabeledDigraph& g, const LabeledDigraph& h, IsoOptions options = {}) {
  return find_isomorphism(g, h, options).has_value();
}
inline bool is_isomorphic(const UndirectedGraph& g, const UndirectedGraph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Node labels agree under `phi`, and edge labels agree wherever both
/// edges exist. Adjacency itself is not checked.
bool respects_labels(const Bijection& phi, const LabeledDigraph& g, const LabeledDigraph& h);

/// `phi` is a label-respecting bijection preserving adjacency both ways.
bool is_isomorphism(const Bijection& phi, const LabeledDigraph& g, const LabeledDigraph& h,
                    IsoOptions options = {});

}  // namespace posetdist
