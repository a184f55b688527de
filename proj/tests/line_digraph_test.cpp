#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetdist/error.hpp"
#include "posetdist/generate.hpp"
#include "posetdist/line_digraph.hpp"

namespace {

using namespace posetdist;
using fixtures::make_graph;

using Named = std::tuple<std::string, std::string, std::string>;

std::multiset<Named> named_edges(const ExtendedLineDigraph& l) {
  std::multiset<Named> out;
  for (const LineEdge& e : l.edges()) {
    out.emplace(l.node_name(e.from), l.node_name(e.to), std::string(to_string(e.relation)));
  }
  return out;
}

// Relation between two distinct source edges computed from the endpoints.
std::vector<std::string> expected_relations(const Edge& a, const Edge& b) {
  std::vector<std::string> out;
  if (a.head == b.tail) out.push_back("ht");
  if (a.tail == b.tail) out.push_back("tt");
  if (a.head == b.head) out.push_back("hh");
  return out;
}

TEST(ExtendedLineDigraph, DiamondFigure) {
  const auto l = extended_line_digraph(fixtures::diamond());
  EXPECT_EQ(l.node_count(), 4U);
  const std::multiset<Named> expected{
      {"(u,v)", "(v,w)", "ht"}, {"(u,x)", "(x,w)", "ht"}, {"(u,x)", "(u,v)", "tt"},
      {"(u,v)", "(u,x)", "tt"}, {"(v,w)", "(x,w)", "hh"}, {"(x,w)", "(v,w)", "hh"},
  };
  EXPECT_EQ(named_edges(l), expected);
  EXPECT_EQ(l.node_labels()[0], (std::pair<std::string, std::string>{"u", "v"}));
  EXPECT_TRUE(l.source_oriented());
}

TEST(ExtendedLineDigraph, SingleEdge) {
  const auto l = extended_line_digraph(make_graph({{"a", "x"}, {"b", "y"}}, {{"a", "b"}}));
  EXPECT_EQ(l.node_count(), 1U);
  EXPECT_EQ(l.edge_count(), 0U);
  EXPECT_EQ(l.node_labels()[0], (std::pair<std::string, std::string>{"x", "y"}));
}

TEST(ExtendedLineDigraph, CyclicTriangleGivesDirectedThreeCycle) {
  const auto l = extended_line_digraph(
      make_graph({{"a", "z"}, {"b", "z"}, {"c", "z"}}, {{"b", "c"}, {"c", "a"}, {"a", "b"}}));
  EXPECT_EQ(l.node_count(), 3U);
  ASSERT_EQ(l.edge_count(), 3U);
  std::vector<int> out(3, 0);
  std::vector<int> in(3, 0);
  for (const auto& e : l.edges()) {
    EXPECT_EQ(e.relation, Relation::HeadToTail);
    ++out[e.from];
    ++in[e.to];
  }
  EXPECT_EQ(out, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(in, (std::vector<int>{1, 1, 1}));
}

TEST(ExtendedLineDigraph, SelfLoopRejected) {
  const auto g = make_graph({{"a", "z"}, {"b", "z"}}, {{"a", "b"}, {"b", "b"}});
  try {
    extended_line_digraph(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimple);
  }
}

TEST(ExtendedLineDigraph, TwoCycleIsFlaggedButBuilt) {
  const auto g = make_graph({{"a", "z"}, {"b", "z"}}, {{"a", "b"}, {"b", "a"}});
  const auto l = extended_line_digraph(g);
  EXPECT_FALSE(l.source_oriented());
  EXPECT_EQ(l.node_count(), 2U);
}

TEST(ExtendedLineDigraph, RelationsMatchEndpointRulesOnRandomGraphs) {
  oracles::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = generate_instance({InstanceKind::Wso, 2 + rng.below(7), 3, 0.45, rng.next()});
    const auto l = extended_line_digraph(g);
    ASSERT_EQ(l.node_count(), g.edge_count());
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> seen;
    for (const auto& e : l.edges()) seen[{e.from, e.to}].push_back(std::string(to_string(e.relation)));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      EXPECT_EQ(l.node_labels()[i].first, g.label(g.edges()[i].tail));
      EXPECT_EQ(l.node_labels()[i].second, g.label(g.edges()[i].head));
      for (std::size_t j = 0; j < g.edge_count(); ++j) {
        if (i == j) continue;
        const auto want = expected_relations(g.edges()[i], g.edges()[j]);
        EXPECT_LE(want.size(), 1U);
        const auto it = seen.find({i, j});
        EXPECT_EQ(it == seen.end() ? std::vector<std::string>{} : it->second, want);
      }
    }
    // Symmetric relations come in both directions with the same label.
    for (const auto& e : l.edges()) {
      if (e.relation == Relation::HeadToTail) continue;
      EXPECT_TRUE(std::find(l.edges().begin(), l.edges().end(), LineEdge{e.to, e.from, e.relation}) !=
                  l.edges().end());
    }
    EXPECT_EQ(extended_line_digraph(g).edges(), l.edges());
  }
}

TEST(ExtendedLineDigraph, DigraphViewCarriesEdgeLabels) {
  const auto d = extended_line_digraph(fixtures::diamond()).as_digraph();
  EXPECT_EQ(d.node_count(), 4U);
  EXPECT_EQ(d.edge_count(), 6U);
  EXPECT_EQ(d.id(0), "(u,v)");
  EXPECT_EQ(d.label(0), pair_label("u", "v"));
  EXPECT_NE(pair_label("a", "bc"), pair_label("ab", "c"));
  const auto idx = d.edge_index(d.index_of("(u,v)"), d.index_of("(v,w)"));
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(d.edge_label(*idx), "ht");
}

TEST(StructureCommutes, FixturesAndRandomGraphs) {
  EXPECT_TRUE(structure_commutes(fixtures::diamond()));
  for (const auto& o : fixtures::triangle_and_claw_orientations()) {
    EXPECT_TRUE(structure_commutes(o.graph)) << o.name;
  }
  oracles::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = generate_instance({InstanceKind::Wso, 2 + rng.below(7), 2, 0.4, rng.next()});
    EXPECT_TRUE(structure_commutes(g));
  }
}

}  // namespace
