#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdist/graph.hpp"

namespace posetdist {

enum class Solver { Auto, BruteForce, Alg1, Alg2, Alg3, Clique };

std::string_view to_string(Solver s);
/// Accepts "auto", "brute", "alg1", "alg2", "alg3", "clique".
std::optional<Solver> parse_solver(std::string_view name);

/// Partial label-respecting injection from the nodes of one graph into the
/// nodes of another, as (node, image) pairs.
struct NodeMatching {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
  std::optional<NodeIndex> image_of(NodeIndex v) const;

  friend bool operator==(const NodeMatching&, const NodeMatching&) = default;
};

/// Throws Error(InvalidMatching) unless `phi` is injective on both
/// coordinates, in range, and label-respecting.
void validate_matching(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi);

/// Number of ordered pairs (a, b) in the domain with (a, b) an edge of g and
/// (phi(a), phi(b)) an edge of h.
std::size_t score(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi);

/// The edge pairs counted by `score`, as (edge index in g, edge index in h),
/// ordered by the g edge index.
std::vector<std::pair<std::size_t, std::size_t>> matched_edges(const LabeledDigraph& g,
                                                               const LabeledDigraph& h,
                                                               const NodeMatching& phi);

struct DmcesOutcome {
  std::size_t value = 0;
  NodeMatching witness;
  std::vector<std::pair<std::size_t, std::size_t>> matched_edges;
  Solver solver = Solver::Auto;
};

struct SearchOptions {
  /// Explore top-level branches with OpenMP. The value is always identical
  /// to the serial run; pick_nodes solvers also keep the serial witness.
  bool parallel = false;
  /// Discard branches whose optimistic edge count cannot beat the incumbent.
  /// Never changes the value or the reported witness.
  bool bound_pruning = true;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Largest node count accepted by the brute-force oracle.
  std::size_t brute_force_cap = 12;
};

}  // namespace posetdist
