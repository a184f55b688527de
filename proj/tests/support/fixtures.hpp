#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "posetdist/graph.hpp"

namespace fixtures {

using posetdist::LabeledDigraph;

struct NodeSpec {
  std::string id;
  std::string label;
};

LabeledDigraph make_graph(std::initializer_list<NodeSpec> nodes,
                          std::initializer_list<std::pair<std::string, std::string>> edges);

/// u->v, u->x, v->w, x->w with labels equal to the ids.
LabeledDigraph diamond();

/// Two 4-node graphs with a 3-cycle each; DMCES 2.
std::pair<LabeledDigraph, LabeledDigraph> cardinality_pair();

/// w->u, u->v, w->v with u, v labeled alpha and w labeled beta, and a
/// primed copy.
std::pair<LabeledDigraph, LabeledDigraph> compatibility_pair();

/// v->u, v->x against v'->u', u'->x', all nodes labeled alike.
std::pair<LabeledDigraph, LabeledDigraph> untwist_counterexample();

/// The six orientations of the triangle and the claw used in the
/// line-digraph separation suite, with the HT/TT/HH counts of each.
struct Orientation {
  std::string name;
  bool triangle = false;
  LabeledDigraph graph;
  std::size_t ht = 0;
  std::size_t tt = 0;
  std::size_t hh = 0;
};
std::vector<Orientation> triangle_and_claw_orientations();

}  // namespace fixtures
