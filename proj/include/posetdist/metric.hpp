#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "posetdist/graph.hpp"
#include "posetdist/matching.hpp"

namespace posetdist {

using Rational = boost::rational<std::int64_t>;

struct DistanceResult {
  std::size_t dmces_value = 0;
  std::size_t normalizer = 0;  // max(|D|, |D'|)
  Rational distance{0};        // 1 - dmces_value / normalizer
  NodeMatching witness;
  std::vector<std::pair<std::size_t, std::size_t>> matched_edges;
  Solver solver = Solver::Auto;

  double distance_value() const {
    return static_cast<double>(distance.numerator()) / static_cast<double>(distance.denominator());
  }
};

/// Edge-based distance on weakly connected, simple, oriented digraphs.
/// Throws Error(PropertyViolation) for other inputs and
/// Error(DegenerateInput) when a graph has no edges.
DistanceResult d_e(const LabeledDigraph& g, const LabeledDigraph& h, Solver solver = Solver::Auto,
                   const SearchOptions& options = {});

/// Node-based distance 1 - MCIS / max(|V|, |V'|). Edge labels take part in
/// the comparison. Two empty graphs are at distance 0.
Rational d_n(const LabeledDigraph& g, const LabeledDigraph& h);

/// d_e between the digraphs of two labeled posets. With Solver::Auto the
/// chain solver is used when every label class of both posets is a chain,
/// and the closure solver otherwise.
DistanceResult poset_distance(const PosetDigraph& p, const PosetDigraph& q,
                              Solver solver = Solver::Auto, const SearchOptions& options = {});
DistanceResult poset_distance(const PosetSpec& p, const PosetSpec& q, Solver solver = Solver::Auto,
                              const SearchOptions& options = {});

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace posetdist
