#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetdist/graph.hpp"
#include "posetdist/matching.hpp"

namespace posetdist {

/// Per-label upper bound on how many nodes of each label a matching can use.
struct LabelBudget {
  std::map<std::string, std::size_t> per_label;
  std::size_t total = 0;
};

LabelBudget label_budget(const LabeledDigraph& g, const LabeledDigraph& h);

/// Exhaustive search over every label-respecting partial injection. Nodes
/// of `g` are visited in index order; each is mapped to every free image in
/// ascending order before being skipped. Throws Error(SizeCapExceeded) when
/// either graph has more than `options.brute_force_cap` nodes.
DmcesOutcome dmces_bruteforce(const LabeledDigraph& g, const LabeledDigraph& h,
                              const SearchOptions& options = {});

/// Branching search restricted to maximal-cardinality matchings.
/// Requires weakly connected, simple, oriented inputs.
DmcesOutcome dmces_alg1(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options = {});

/// Alg1 over a topological order, skipping images that would twist a pair
/// of equally labeled comparable nodes.
DmcesOutcome dmces_alg2(const PosetDigraph& g, const PosetDigraph& h,
                        const SearchOptions& options = {});

/// Alg2 plus exclusion of images below an already used image of the same
/// label. Every label class of both inputs must be a chain.
DmcesOutcome dmces_alg3(const PosetDigraph& g, const PosetDigraph& h,
                        const SearchOptions& options = {});

/// Validating overloads: alg2 and alg3 throw the PosetDigraph construction
/// error; alg3 additionally throws Error(LabelClassNotPath).
DmcesOutcome dmces_alg2(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options = {});
DmcesOutcome dmces_alg3(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options = {});

/// Policy used by Solver::Auto.
Solver select_auto_solver(const LabeledDigraph& g, const LabeledDigraph& h);

/// Runs the requested solver; Auto resolves through select_auto_solver.
DmcesOutcome dmces(const LabeledDigraph& g, const LabeledDigraph& h, Solver solver = Solver::Auto,
                   const SearchOptions& options = {});

/// Twisted pairs of `phi`: (a, b) with equal labels, (a, b) an edge of g and
/// (phi(b), phi(a)) an edge of h. Sorted; empty iff `phi` respects order.
std::vector<std::pair<NodeIndex, NodeIndex>> respects_order_on_labels(const LabeledDigraph& g,
                                                                      const LabeledDigraph& h,
                                                                      const NodeMatching& phi);

/// Swaps the images of `u` and `v`. Throws Error(PairNotTwisted) unless the
/// unordered pair {u, v} is twisted under `phi`.
NodeMatching untwist(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi,
                     NodeIndex u, NodeIndex v);

}  // namespace posetdist
