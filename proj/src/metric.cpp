#include "posetdist/metric.hpp"

#include <algorithm>

#include "posetdist/clique.hpp"
#include "posetdist/dmces.hpp"
#include "posetdist/error.hpp"

namespace posetdist {

namespace {

DistanceResult from_outcome(DmcesOutcome o, std::size_t normalizer) {
  DistanceResult r;
  r.dmces_value = o.value;
  r.normalizer = normalizer;
  r.distance = Rational(1) - Rational(static_cast<std::int64_t>(o.value),
                                      static_cast<std::int64_t>(normalizer));
  r.witness = std::move(o.witness);
  r.matched_edges = std::move(o.matched_edges);
  r.solver = o.solver;
  return r;
}

}  // namespace

DistanceResult d_e(const LabeledDigraph& g, const LabeledDigraph& h, Solver solver,
                   const SearchOptions& options) {
  require_wso(g, "first graph");
  require_wso(h, "second graph");
  if (g.edge_count() == 0 || h.edge_count() == 0) {
    throw Error(ErrorCode::DegenerateInput, "edge distance needs at least one edge in each graph");
  }
  return from_outcome(dmces(g, h, solver, options), std::max(g.edge_count(), h.edge_count()));
}

Rational d_n(const LabeledDigraph& g, const LabeledDigraph& h) {
  const std::size_t normalizer = std::max(g.node_count(), h.node_count());
  if (normalizer == 0) return Rational(0);
  const std::size_t common = mcis(g, h).size;
  return Rational(1) - Rational(static_cast<std::int64_t>(common),
                                static_cast<std::int64_t>(normalizer));
}

DistanceResult poset_distance(const PosetDigraph& p, const PosetDigraph& q, Solver solver,
                              const SearchOptions& options) {
  if (solver == Solver::Auto) {
    solver = has_label_paths(p.graph()) && has_label_paths(q.graph()) ? Solver::Alg3 : Solver::Alg2;
  }
  return d_e(p.graph(), q.graph(), solver, options);
}

DistanceResult poset_distance(const PosetSpec& p, const PosetSpec& q, Solver solver,
                              const SearchOptions& options) {
  return poset_distance(build_poset_digraph(p), build_poset_digraph(q), solver, options);
}

}  // namespace posetdist
