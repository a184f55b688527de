#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "posetdist/graph.hpp"
#include "posetdist/matching.hpp"

namespace posetdist {

/// Undirected graph as dense adjacency bitsets, for clique search.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t edge_count() const noexcept { return edges_; }

  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t a) const {
    return {rows_.data() + a * words_, words_};
  }
  std::size_t degree(std::size_t a) const;

  static BitGraph from(const UndirectedGraph& g);
  UndirectedGraph to_undirected() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Association graph of two labeled digraphs. Node k stands for the pair
/// pairs[k] = (n, n') of nodes with equal labels; two pairs are adjacent
/// when they use distinct nodes on both sides and agree on adjacency (and
/// edge label) in both directions.
struct CompatibilityGraph {
  BitGraph graph;
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
};

CompatibilityGraph compatibility_graph(const LabeledDigraph& g, const LabeledDigraph& h,
                                       bool match_edge_labels = true);

struct CliqueOptions {
  /// Split the root branches across OpenMP threads. The size is unaffected.
  bool parallel = false;
  /// Return the lexicographically smallest maximum clique. When false the
  /// first clique found is returned, which depends on thread timing if
  /// `parallel` is set.
  bool lexicographic_witness = true;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Exact maximum clique by branch and bound with a greedy coloring bound.
/// The result is sorted ascending.
std::vector<std::size_t> max_clique(const BitGraph& g, CliqueOptions options = {});
std::vector<NodeIndex> max_clique(const UndirectedGraph& g, CliqueOptions options = {});

/// Reference clique search: plain Bron-Kerbosch without pivoting or bounds.
/// Kept serial and simple for cross-checking.
std::size_t max_clique_size_reference(const BitGraph& g);

struct McisResult {
  std::size_t size = 0;
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
};

/// Maximum common node-induced subgraph via the association graph.
McisResult mcis(const LabeledDigraph& g, const LabeledDigraph& h, CliqueOptions options = {});

/// DMCES as a maximum clique in the association graph of the extended line
/// digraphs. Inputs must be weakly connected, simple and oriented.
DmcesOutcome dmces_via_clique(const LabeledDigraph& g, const LabeledDigraph& h,
                              CliqueOptions options = {});

}  // namespace posetdist
