#include "posetdist/matching.hpp"

#include <algorithm>
#include <string>

#include "posetdist/error.hpp"

namespace posetdist {

std::string_view to_string(Solver s) {
  switch (s) {
    case Solver::Auto: return "auto";
    case Solver::BruteForce: return "brute";
    case Solver::Alg1: return "alg1";
    case Solver::Alg2: return "alg2";
    case Solver::Alg3: return "alg3";
    case Solver::Clique: return "clique";
  }
  return "auto";
}

std::optional<Solver> parse_solver(std::string_view name) {
  for (Solver s : {Solver::Auto, Solver::BruteForce, Solver::Alg1, Solver::Alg2, Solver::Alg3,
                   Solver::Clique}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<NodeIndex> NodeMatching::image_of(NodeIndex v) const {
  for (const auto& [a, b] : pairs) {
    if (a == v) return b;
  }
  return std::nullopt;
}

void validate_matching(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi) {
  std::vector<bool> used_g(g.node_count(), false);
  std::vector<bool> used_h(h.node_count(), false);
  for (const auto& [a, b] : phi.pairs) {
    if (a >= g.node_count() || b >= h.node_count()) {
      throw Error(ErrorCode::InvalidMatching, "matching refers to a node outside the graph");
    }
    if (used_g[a]) {
      throw Error(ErrorCode::InvalidMatching, "node " + g.id(a) + " is matched twice");
    }
    if (used_h[b]) {
      throw Error(ErrorCode::InvalidMatching, "matching is not injective at " + h.id(b));
    }
    if (g.label(a) != h.label(b)) {
      throw Error(ErrorCode::InvalidMatching,
                  "node " + g.id(a) + " and its image " + h.id(b) + " carry different labels");
    }
    used_g[a] = used_h[b] = true;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> matched_edges(const LabeledDigraph& g,
                                                               const LabeledDigraph& h,
                                                               const NodeMatching& phi) {
  validate_matching(g, h, phi);
  std::vector<std::optional<NodeIndex>> image(g.node_count());
  for (const auto& [a, b] : phi.pairs) image[a] = b;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (!image[e.tail] || !image[e.head]) continue;
    if (auto j = h.edge_index(*image[e.tail], *image[e.head])) out.emplace_back(i, *j);
  }
  return out;
}

std::size_t score(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi) {
  return matched_edges(g, h, phi).size();
}

}  // namespace posetdist
