#include "fixtures.hpp"

namespace fixtures {

LabeledDigraph make_graph(std::initializer_list<NodeSpec> nodes,
                          std::initializer_list<std::pair<std::string, std::string>> edges) {
  LabeledDigraph g;
  for (const auto& n : nodes) g.add_node(n.id, n.label);
  for (const auto& [s, t] : edges) g.add_edge(s, t);
  return g;
}

LabeledDigraph diamond() {
  return make_graph({{"u", "u"}, {"v", "v"}, {"w", "w"}, {"x", "x"}},
                    {{"u", "v"}, {"u", "x"}, {"v", "w"}, {"x", "w"}});
}

std::pair<LabeledDigraph, LabeledDigraph> cardinality_pair() {
  return {make_graph({{"n1", "a"}, {"n2", "a"}, {"n3", "a"}, {"n4", "b"}},
                     {{"n1", "n4"}, {"n3", "n1"}, {"n4", "n3"}, {"n4", "n2"}}),
          make_graph({{"n5", "a"}, {"n6", "a"}, {"n7", "b"}, {"n8", "b"}},
                     {{"n5", "n8"}, {"n7", "n5"}, {"n8", "n7"}, {"n8", "n6"}})};
}

std::pair<LabeledDigraph, LabeledDigraph> compatibility_pair() {
  return {make_graph({{"w", "beta"}, {"u", "alpha"}, {"v", "alpha"}},
                     {{"w", "u"}, {"u", "v"}, {"w", "v"}}),
          make_graph({{"w'", "beta"}, {"u'", "alpha"}, {"v'", "alpha"}},
                     {{"w'", "u'"}, {"u'", "v'"}, {"w'", "v'"}})};
}

std::pair<LabeledDigraph, LabeledDigraph> untwist_counterexample() {
  return {make_graph({{"u", "a"}, {"v", "a"}, {"x", "a"}}, {{"v", "u"}, {"v", "x"}}),
          make_graph({{"u'", "a"}, {"v'", "a"}, {"x'", "a"}}, {{"v'", "u'"}, {"u'", "x'"}})};
}

std::vector<Orientation> triangle_and_claw_orientations() {
  const std::initializer_list<NodeSpec> tri{{"a", "z"}, {"b", "z"}, {"c", "z"}};
  const std::initializer_list<NodeSpec> claw{{"a", "z"}, {"b", "z"}, {"c", "z"}, {"d", "z"}};
  std::vector<Orientation> out;
  out.push_back({"triangle cyclic", true, make_graph(tri, {{"b", "c"}, {"c", "a"}, {"a", "b"}}), 3, 0, 0});
  out.push_back({"triangle transitive", true, make_graph(tri, {{"c", "b"}, {"c", "a"}, {"a", "b"}}), 1, 2, 2});
  out.push_back({"claw all in", false, make_graph(claw, {{"b", "a"}, {"c", "a"}, {"d", "a"}}), 0, 0, 6});
  out.push_back({"claw two in", false, make_graph(claw, {{"b", "a"}, {"c", "a"}, {"a", "d"}}), 2, 0, 2});
  out.push_back({"claw one in", false, make_graph(claw, {{"b", "a"}, {"a", "c"}, {"a", "d"}}), 2, 2, 0});
  out.push_back({"claw all out", false, make_graph(claw, {{"a", "b"}, {"a", "c"}, {"a", "d"}}), 0, 6, 0});
  return out;
}

}  // namespace fixtures
