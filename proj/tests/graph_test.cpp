#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetdist/error.hpp"
#include "posetdist/generate.hpp"
#include "posetdist/graph.hpp"
#include "posetdist/isomorphism.hpp"

namespace {

using namespace posetdist;
using fixtures::make_graph;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

std::vector<std::string> ids(const LabeledDigraph& g, const std::vector<NodeIndex>& nodes) {
  std::vector<std::string> out;
  for (NodeIndex v : nodes) out.push_back(g.id(v));
  return out;
}

// Random DAG on n nodes: edges only go from lower to higher index.
LabeledDigraph random_dag(oracles::Rng& rng, std::size_t n, double p) {
  LabeledDigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("n" + std::to_string(i), rng.chance(0.5) ? "a" : "b");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(p)) g.add_edge(i, j);
    }
  }
  return g;
}

// Reachability by repeated depth-first search over out-neighbours.
std::vector<std::vector<bool>> dfs_reach(const LabeledDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (NodeIndex s = 0; s < n; ++s) {
    std::vector<NodeIndex> stack{s};
    std::vector<bool> seen(n, false);
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      for (NodeIndex w : g.out_neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          reach[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

TEST(LabeledDigraph, KeepsInsertionOrderAndRejectsDuplicates) {
  LabeledDigraph g;
  EXPECT_EQ(g.add_node("b", "x"), 0U);
  EXPECT_EQ(g.add_node("a", "y"), 1U);
  EXPECT_TRUE(g.add_edge("b", "a"));
  EXPECT_FALSE(g.add_edge("b", "a"));
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.ids(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(code_of([&] { g.add_node("a", "z"); }), ErrorCode::DuplicateNode);
  EXPECT_EQ(code_of([&] { g.index_of("missing"); }), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of([&] { g.add_edge("a", "missing"); }), ErrorCode::UnknownNode);
}

TEST(UndirectedGraph, RejectsSelfLoops) {
  UndirectedGraph u;
  u.add_node("a");
  u.add_node("b");
  EXPECT_TRUE(u.add_edge(1, 0));
  EXPECT_FALSE(u.add_edge(0, 1));
  EXPECT_EQ(u.edges().front(), (Edge{0, 1}));
  EXPECT_EQ(code_of([&] { u.add_edge(0, 0); }), ErrorCode::NotSimple);
}

TEST(ValidateProperties, CyclicTriangle) {
  const auto g = make_graph({{"a", "z"}, {"b", "z"}, {"c", "z"}}, {{"b", "c"}, {"c", "a"}, {"a", "b"}});
  const auto r = validate_properties(g);
  EXPECT_TRUE(r.is_finite);
  EXPECT_TRUE(r.is_weakly_connected);
  EXPECT_TRUE(r.is_simple);
  EXPECT_TRUE(r.is_oriented);
  EXPECT_FALSE(r.is_acyclic);
  EXPECT_FALSE(r.per_label_path);
}

TEST(ValidateProperties, TwoCycleIsNotOriented) {
  const auto g = make_graph({{"u", "a"}, {"v", "a"}}, {{"u", "v"}, {"v", "u"}});
  EXPECT_FALSE(validate_properties(g).is_oriented);
  EXPECT_FALSE(validate_properties(g).wso());
}

TEST(ValidateProperties, SelfLoopIsNotSimple) {
  const auto g = make_graph({{"u", "a"}, {"v", "a"}}, {{"u", "v"}, {"v", "v"}});
  EXPECT_FALSE(validate_properties(g).is_simple);
}

TEST(ValidateProperties, ClosedChainPassesEverything) {
  const auto g = fixtures::compatibility_pair().first;
  const auto r = validate_properties(g);
  EXPECT_TRUE(r.is_weakly_connected && r.is_simple && r.is_oriented && r.is_acyclic);
  EXPECT_TRUE(r.is_transitively_closed);
  EXPECT_TRUE(r.per_label_path);

  // Definitional check: every two-step path has its shortcut, and each label
  // class is totally ordered by the edges.
  const std::size_t n = g.node_count();
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = 0; b < n; ++b) {
      for (NodeIndex c = 0; c < n; ++c) {
        if (g.has_edge(a, b) && g.has_edge(b, c)) EXPECT_TRUE(g.has_edge(a, c));
      }
      if (a != b && g.label(a) == g.label(b)) EXPECT_TRUE(g.has_edge(a, b) || g.has_edge(b, a));
    }
  }
}

TEST(ValidateProperties, LabelClassWithBranchIsNotAPath) {
  const auto g = make_graph({{"r", "a"}, {"s", "a"}, {"t", "a"}}, {{"r", "s"}, {"r", "t"}});
  EXPECT_FALSE(validate_properties(g).per_label_path);
  const auto isolated = make_graph({{"r", "a"}, {"s", "b"}, {"t", "a"}}, {{"r", "s"}, {"s", "t"}});
  EXPECT_FALSE(validate_properties(isolated).per_label_path);
}

TEST(ValidateProperties, DisconnectedGraph) {
  const auto g = make_graph({{"a", "x"}, {"b", "x"}, {"c", "x"}}, {{"a", "b"}});
  EXPECT_FALSE(is_weakly_connected(g));
  EXPECT_EQ(code_of([&] { require_wso(g, "input"); }), ErrorCode::PropertyViolation);
}

TEST(BuildPoset, ClosesAChain) {
  const auto p = build_poset_digraph({{"1", "a"}, {"2", "a"}, {"3", "b"}}, {{"1", "2"}, {"2", "3"}});
  const auto& g = p.graph();
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(BuildPoset, DropsReflexivePairs) {
  const auto p = build_poset_digraph({{"1", "a"}, {"2", "a"}}, {{"1", "1"}, {"1", "2"}, {"2", "2"}});
  EXPECT_EQ(p.graph().edge_count(), 1U);
}

TEST(BuildPoset, Errors) {
  EXPECT_EQ(code_of([] { build_poset_digraph({{"1", "a"}, {"2", "a"}}, {{"1", "2"}, {"2", "1"}}); }),
            ErrorCode::AntisymmetryViolation);
  EXPECT_EQ(code_of([] {
              build_poset_digraph({{"1", "a"}, {"2", "a"}, {"3", "a"}},
                                  {{"1", "2"}, {"2", "3"}, {"3", "1"}});
            }),
            ErrorCode::AntisymmetryViolation);
  EXPECT_EQ(code_of([] { build_poset_digraph({{"1", "a"}, {"2", "a"}}, {}); }), ErrorCode::DegeneratePoset);
  EXPECT_EQ(code_of([] { build_poset_digraph({{"1", "a"}}, {{"1", "1"}}); }), ErrorCode::DegeneratePoset);
  EXPECT_EQ(code_of([] {
              build_poset_digraph({{"1", "a"}, {"2", "a"}, {"3", "a"}, {"4", "a"}},
                                  {{"1", "2"}, {"3", "4"}});
            }),
            ErrorCode::NotWeaklyConnected);
  EXPECT_EQ(code_of([] { build_poset_digraph({{"1", "a"}}, {{"1", "9"}}); }), ErrorCode::UnknownNode);
}

TEST(PosetDigraph, FromGraphReportsTheViolatedProperty) {
  const auto open = make_graph({{"1", "a"}, {"2", "a"}, {"3", "a"}}, {{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(code_of([&] { PosetDigraph::from_graph(open); }), ErrorCode::NotTransitivelyClosed);
  const auto cyclic = make_graph({{"1", "a"}, {"2", "a"}}, {{"1", "2"}, {"2", "1"}});
  EXPECT_NE(code_of([&] { PosetDigraph::from_graph(cyclic); }), ErrorCode::NotTransitivelyClosed);
}

TEST(BuildPoset, RebuildingFromItsOwnRelationIsIdentity) {
  oracles::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = generate_instance({InstanceKind::Closure, 3 + rng.below(6), 2, 0.4, rng.next()});
    PosetSpec spec;
    for (NodeIndex v = 0; v < g.node_count(); ++v) spec.elements.push_back({g.id(v), g.label(v)});
    for (const Edge& e : g.edges()) spec.relations.emplace_back(g.id(e.tail), g.id(e.head));
    const auto once = build_poset_digraph(spec);
    PosetSpec again;
    again.elements = spec.elements;
    for (const Edge& e : once.graph().edges()) {
      again.relations.emplace_back(once.graph().id(e.tail), once.graph().id(e.head));
    }
    const auto twice = build_poset_digraph(again);
    EXPECT_EQ(once.graph().edges(), twice.graph().edges());
    EXPECT_EQ(once.graph().labels(), twice.graph().labels());
  }
}

TEST(Structure, DiamondBecomesFourCycle) {
  const auto s = structure(fixtures::diamond());
  EXPECT_EQ(s.node_count(), 4U);
  EXPECT_EQ(s.edge_count(), 4U);
  for (NodeIndex v = 0; v < 4; ++v) EXPECT_EQ(s.degree(v), 2U);
  EXPECT_FALSE(s.has_edge(*s.find("u"), *s.find("w")));
  EXPECT_FALSE(s.has_edge(*s.find("v"), *s.find("x")));
}

TEST(Structure, SingleNode) {
  const auto s = structure(make_graph({{"a", "x"}}, {}));
  EXPECT_EQ(s.node_count(), 1U);
  EXPECT_EQ(s.edge_count(), 0U);
}

TEST(Structure, OrientationsKeepTheirShape) {
  UndirectedGraph tri;
  UndirectedGraph claw;
  for (int i = 0; i < 3; ++i) tri.add_node(std::to_string(i));
  for (int i = 0; i < 4; ++i) claw.add_node(std::to_string(i));
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  for (const auto& o : fixtures::triangle_and_claw_orientations()) {
    EXPECT_TRUE(is_isomorphic(structure(o.graph), o.triangle ? tri : claw)) << o.name;
  }
}

TEST(LineGraph, ClawAndTriangleShareALineGraph) {
  UndirectedGraph tri;
  UndirectedGraph claw;
  for (int i = 0; i < 3; ++i) tri.add_node(std::to_string(i));
  for (int i = 0; i < 4; ++i) claw.add_node(std::to_string(i));
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  EXPECT_TRUE(is_isomorphic(line_graph(claw), tri));
  EXPECT_TRUE(is_isomorphic(line_graph(tri), tri));
  EXPECT_FALSE(is_isomorphic(claw, tri));
}

TEST(LineGraph, SmallCases) {
  UndirectedGraph edge;
  edge.add_node("a");
  edge.add_node("b");
  edge.add_edge(0, 1);
  const auto l1 = line_graph(edge);
  EXPECT_EQ(l1.node_count(), 1U);
  EXPECT_EQ(l1.edge_count(), 0U);

  UndirectedGraph path;
  for (int i = 0; i < 3; ++i) path.add_node(std::to_string(i));
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto l2 = line_graph(path);
  EXPECT_EQ(l2.node_count(), 2U);
  EXPECT_EQ(l2.edge_count(), 1U);
}

TEST(Predecessors, ChainAndSource) {
  const auto g = fixtures::compatibility_pair().first;
  EXPECT_EQ(ids(g, predecessors(g, g.index_of("v"))), (std::vector<std::string>{"w", "u"}));
  EXPECT_TRUE(predecessors(g, g.index_of("w")).empty());
  const auto open = make_graph({{"1", "a"}, {"2", "a"}, {"3", "a"}}, {{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(ids(open, predecessors(open, 2)), (std::vector<std::string>{"1", "2"}));
}

TEST(Predecessors, EqualInNeighboursOnClosures) {
  oracles::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = transitive_closure(random_dag(rng, 2 + rng.below(11), 0.3));
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      std::vector<NodeIndex> in(g.in_neighbors(v).begin(), g.in_neighbors(v).end());
      std::sort(in.begin(), in.end());
      EXPECT_EQ(predecessors(g, v), in);
    }
  }
}

TEST(TopologicalSort, Examples) {
  const auto chain = make_graph({{"1", "a"}, {"2", "a"}, {"3", "a"}}, {{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(topological_sort(chain), (std::vector<NodeIndex>{0, 1, 2}));
  const auto d = fixtures::diamond();
  EXPECT_EQ(ids(d, topological_sort(d)), (std::vector<std::string>{"u", "v", "x", "w"}));
  const auto cyc = make_graph({{"a", "z"}, {"b", "z"}, {"c", "z"}}, {{"b", "c"}, {"c", "a"}, {"a", "b"}});
  EXPECT_EQ(code_of([&] { topological_sort(cyc); }), ErrorCode::CycleDetected);
}

TEST(TopologicalSort, EdgesPointForward) {
  oracles::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dag = random_dag(rng, 2 + rng.below(10), 0.35);
    const auto perm = rng.permutation(dag.node_count());
    const auto g = oracles::permuted(dag, perm);
    const auto order = topological_sort(g);
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const Edge& e : g.edges()) EXPECT_LT(pos[e.tail], pos[e.head]);
  }
}

TEST(Closure, ChainAndIdempotence) {
  const auto chain = make_graph({{"1", "a"}, {"2", "a"}, {"3", "a"}}, {{"1", "2"}, {"2", "3"}});
  const auto c = transitive_closure(chain);
  EXPECT_EQ(c.edge_count(), 3U);
  EXPECT_TRUE(c.has_edge(0, 2));
  const auto closed = fixtures::compatibility_pair().first;
  EXPECT_EQ(transitive_closure(closed).edge_count(), closed.edge_count());
  EXPECT_EQ(transitive_reduction(closed).edge_count(), 2U);
  const auto cyc = make_graph({{"a", "z"}, {"b", "z"}}, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(code_of([&] { transitive_closure(cyc); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([&] { transitive_reduction(cyc); }), ErrorCode::CycleDetected);
}

TEST(Closure, MatchesReachabilityAndReductionRoundTrips) {
  oracles::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_dag(rng, 2 + rng.below(7), 0.4);
    const auto c = transitive_closure(g);
    const auto reach = dfs_reach(g);
    EXPECT_EQ(reachability(g), reach);
    for (NodeIndex a = 0; a < g.node_count(); ++a) {
      for (NodeIndex b = 0; b < g.node_count(); ++b) EXPECT_EQ(c.has_edge(a, b), reach[a][b]);
    }
    EXPECT_TRUE(validate_properties(c).is_transitively_closed);
    const auto r = transitive_reduction(g);
    EXPECT_EQ(transitive_closure(r).edges(), c.edges());
    for (const Edge& e : r.edges()) {
      // No reduction edge is implied by a longer path.
      for (NodeIndex mid = 0; mid < g.node_count(); ++mid) {
        EXPECT_FALSE(reach[e.tail][mid] && reach[mid][e.head]);
      }
    }
  }
}

TEST(Subgraphs, NodeAndEdgeInduced) {
  const auto g = fixtures::diamond();
  const std::vector<NodeIndex> keep{0, 1, 2};
  const auto sub = node_induced_subgraph(g, keep);
  EXPECT_EQ(sub.node_count(), 3U);
  EXPECT_EQ(sub.edge_count(), 2U);
  const std::vector<std::size_t> es{2, 0};
  const auto esub = edge_induced_subgraph(g, es);
  EXPECT_EQ(esub.ids(), (std::vector<std::string>{"v", "w", "u"}));
  EXPECT_EQ(esub.edge_count(), 2U);
}

}  // namespace
