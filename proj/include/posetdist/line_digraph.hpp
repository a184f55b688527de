#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdist/graph.hpp"

namespace posetdist {

enum class Relation { HeadToTail, TailToTail, HeadToHead };

/// "ht", "tt" or "hh".
std::string_view to_string(Relation r);

struct LineEdge {
  std::size_t from = 0;  // index into ExtendedLineDigraph::nodes()
  std::size_t to = 0;
  Relation relation = Relation::HeadToTail;

  friend bool operator==(const LineEdge&, const LineEdge&) = default;
};

/// Dual of a node-labeled digraph: one node per source edge, labeled by the
/// pair of endpoint labels; directed edges record how two source edges meet.
/// Tail-to-tail and head-to-head relations are stored in both directions.
class ExtendedLineDigraph {
 public:
  const std::vector<Edge>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<std::string, std::string>>& node_labels() const noexcept {
    return node_labels_;
  }
  const std::vector<LineEdge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Display name of node `i`, e.g. "(u,v)".
  const std::string& node_name(std::size_t i) const { return names_.at(i); }

  /// False when the source graph had a 2-cycle; the isomorphism properties
  /// of this construction only hold for oriented sources.
  bool source_oriented() const noexcept { return source_oriented_; }

  /// The same graph as a LabeledDigraph: node ids are the display names,
  /// node labels encode the label pair, edge labels are "ht"/"tt"/"hh".
  /// Node i of the result corresponds to source edge i.
  LabeledDigraph as_digraph() const;

 private:
  friend ExtendedLineDigraph extended_line_digraph(const LabeledDigraph& g);

  std::vector<Edge> nodes_;
  std::vector<std::pair<std::string, std::string>> node_labels_;
  std::vector<std::string> names_;
  std::vector<LineEdge> edges_;
  bool source_oriented_ = true;
};

/// Throws Error(NotSimple) if `g` has a self-loop.
ExtendedLineDigraph extended_line_digraph(const LabeledDigraph& g);

/// Encodes a label pair as a single node label for the digraph view.
std::string pair_label(std::string_view tail_label, std::string_view head_label);

/// Cross-check that the structure of the extended line digraph is
/// isomorphic to the line graph of the structure of `g`.
bool structure_commutes(const LabeledDigraph& g);

}  // namespace posetdist
