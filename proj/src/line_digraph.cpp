#include "posetdist/line_digraph.hpp"

#include "posetdist/error.hpp"
#include "posetdist/isomorphism.hpp"

namespace posetdist {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::HeadToTail: return "ht";
    case Relation::TailToTail: return "tt";
    case Relation::HeadToHead: return "hh";
  }
  return "?";
}

std::string pair_label(std::string_view tail_label, std::string_view head_label) {
  std::string out;
  out.reserve(tail_label.size() + head_label.size() + 1);
  out.append(tail_label);
  out.push_back('\x1f');
  out.append(head_label);
  return out;
}

ExtendedLineDigraph extended_line_digraph(const LabeledDigraph& g) {
  if (!is_simple(g)) throw Error(ErrorCode::NotSimple, "extended line digraph needs a simple graph");
  ExtendedLineDigraph l;
  l.source_oriented_ = is_oriented(g);
  const auto& edges = g.edges();
  l.nodes_ = edges;
  for (const Edge& e : edges) {
    l.node_labels_.emplace_back(g.label(e.tail), g.label(e.head));
    l.names_.push_back("(" + g.id(e.tail) + "," + g.id(e.head) + ")");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.head == f.tail) l.edges_.push_back({i, j, Relation::HeadToTail});
      if (f.head == e.tail) l.edges_.push_back({j, i, Relation::HeadToTail});
      if (e.tail == f.tail) {
        l.edges_.push_back({i, j, Relation::TailToTail});
        l.edges_.push_back({j, i, Relation::TailToTail});
      }
      if (e.head == f.head) {
        l.edges_.push_back({i, j, Relation::HeadToHead});
        l.edges_.push_back({j, i, Relation::HeadToHead});
      }
    }
  }
  return l;
}

LabeledDigraph ExtendedLineDigraph::as_digraph() const {
  LabeledDigraph d;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    d.add_node(names_[i], pair_label(node_labels_[i].first, node_labels_[i].second));
  }
  for (const LineEdge& e : edges_) d.add_edge(e.from, e.to, std::string(to_string(e.relation)));
  return d;
}

bool structure_commutes(const LabeledDigraph& g) {
  const UndirectedGraph lhs = structure(extended_line_digraph(g).as_digraph());
  const UndirectedGraph rhs = line_graph(structure(g));
  return find_isomorphism(lhs, rhs).has_value();
}

}  // namespace posetdist
