#include "posetdist/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "posetdist/error.hpp"

namespace posetdist {

std::vector<std::pair<NodeIndex, NodeIndex>> Bijection::pairs() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  out.reserve(image.size());
  for (NodeIndex v = 0; v < image.size(); ++v) out.emplace_back(v, image[v]);
  return out;
}

namespace {

// Adjacency matrix with interned labels; -1 marks a missing edge.
struct Dense {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<int> color;
  std::vector<int> adj;
  std::vector<std::vector<NodeIndex>> out;
  std::vector<std::vector<NodeIndex>> in;

  int at(NodeIndex a, NodeIndex b) const { return adj[a * n + b]; }
};

class Interner {
 public:
  int operator()(const std::string& s) {
    return table_.emplace(s, static_cast<int>(table_.size())).first->second;
  }

 private:
  std::map<std::string, int> table_;
};

Dense densify(const LabeledDigraph& g, Interner& node_labels, Interner& edge_labels,
              bool use_edge_labels) {
  Dense d;
  d.n = g.node_count();
  d.edges = g.edge_count();
  d.adj.assign(d.n * d.n, -1);
  d.out.resize(d.n);
  d.in.resize(d.n);
  for (NodeIndex v = 0; v < d.n; ++v) d.color.push_back(node_labels(g.label(v)));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    d.adj[e.tail * d.n + e.head] = use_edge_labels ? edge_labels(g.edge_label(i)) : 0;
    d.out[e.tail].push_back(e.head);
    d.in[e.head].push_back(e.tail);
  }
  return d;
}

Dense densify(const UndirectedGraph& g) {
  Dense d;
  d.n = g.node_count();
  d.edges = g.edge_count();
  d.adj.assign(d.n * d.n, -1);
  d.color.assign(d.n, 0);
  d.out.resize(d.n);
  d.in.resize(d.n);
  for (const Edge& e : g.edges()) {
    d.adj[e.tail * d.n + e.head] = 0;
    d.adj[e.head * d.n + e.tail] = 0;
    d.out[e.tail].push_back(e.head);
    d.out[e.head].push_back(e.tail);
    d.in[e.tail].push_back(e.head);
    d.in[e.head].push_back(e.tail);
  }
  return d;
}

// Joint 1-dimensional color refinement. Returns false as soon as the color
// histograms of the two graphs differ.
bool refine(Dense& a, Dense& b) {
  using Signature = std::tuple<int, std::vector<std::tuple<int, int, int>>>;
  auto histogram = [](const Dense& d) {
    std::vector<int> h = d.color;
    std::sort(h.begin(), h.end());
    return h;
  };
  if (histogram(a) != histogram(b)) return false;
  std::size_t classes = 0;
  for (std::size_t round = 0; round <= a.n + 1; ++round) {
    std::map<Signature, int> table;
    auto signatures = [&](const Dense& d) {
      std::vector<Signature> sig(d.n);
      for (NodeIndex v = 0; v < d.n; ++v) {
        std::vector<std::tuple<int, int, int>> nbrs;
        for (NodeIndex w : d.out[v]) nbrs.emplace_back(0, d.at(v, w), d.color[w]);
        for (NodeIndex w : d.in[v]) nbrs.emplace_back(1, d.at(w, v), d.color[w]);
        std::sort(nbrs.begin(), nbrs.end());
        sig[v] = {d.color[v], std::move(nbrs)};
      }
      return sig;
    };
    auto sa = signatures(a);
    auto sb = signatures(b);
    for (const auto& s : sa) table.emplace(s, 0);
    for (const auto& s : sb) table.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : table) id = next++;
    for (NodeIndex v = 0; v < a.n; ++v) a.color[v] = table[sa[v]];
    for (NodeIndex v = 0; v < b.n; ++v) b.color[v] = table[sb[v]];
    if (histogram(a) != histogram(b)) return false;
    if (table.size() == classes) break;
    classes = table.size();
  }
  return true;
}

class Matcher {
 public:
  Matcher(const Dense& g, const Dense& h) : g_(g), h_(h), image_(g.n, 0), used_(h.n, false) {}

  std::optional<Bijection> run() {
    if (!extend(0)) return std::nullopt;
    return Bijection{image_};
  }

 private:
  bool extend(NodeIndex v) {
    if (v == g_.n) return true;
    for (NodeIndex w = 0; w < h_.n; ++w) {
      if (used_[w] || g_.color[v] != h_.color[w] || !consistent(v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(v + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  bool consistent(NodeIndex v, NodeIndex w) const {
    if (g_.at(v, v) != h_.at(w, w)) return false;
    for (NodeIndex u = 0; u < v; ++u) {
      const NodeIndex x = image_[u];
      if (g_.at(u, v) != h_.at(x, w) || g_.at(v, u) != h_.at(w, x)) return false;
    }
    return true;
  }

  const Dense& g_;
  const Dense& h_;
  std::vector<NodeIndex> image_;
  std::vector<bool> used_;
};

std::optional<Bijection> match(Dense a, Dense b) {
  if (a.n != b.n || a.edges != b.edges) return std::nullopt;
  if (!refine(a, b)) return std::nullopt;
  return Matcher(a, b).run();
}

}  // namespace

std::optional<Bijection> find_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h,
                                          IsoOptions options) {
  Interner node_labels;
  Interner edge_labels;
  Dense a = densify(g, node_labels, edge_labels, options.match_edge_labels);
  Dense b = densify(h, node_labels, edge_labels, options.match_edge_labels);
  return match(std::move(a), std::move(b));
}

std::optional<Bijection> find_isomorphism(const UndirectedGraph& g, const UndirectedGraph& h) {
  return match(densify(g), densify(h));
}

std::optional<Bijection> find_isomorphism(GraphRef g, GraphRef h, IsoOptions options) {
  if (g.index() != h.index()) {
    throw Error(ErrorCode::KindMismatch, "cannot compare a directed graph with an undirected one");
  }
  if (g.index() == 0) {
    return find_isomorphism(std::get<0>(g).get(), std::get<0>(h).get(), options);
  }
  return find_isomorphism(std::get<1>(g).get(), std::get<1>(h).get());
}

bool respects_labels(const Bijection& phi, const LabeledDigraph& g, const LabeledDigraph& h) {
  if (phi.image.size() != g.node_count()) return false;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (phi.image[v] >= h.node_count() || g.label(v) != h.label(phi.image[v])) return false;
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (auto j = h.edge_index(phi.image[e.tail], phi.image[e.head])) {
      if (g.edge_label(i) != h.edge_label(*j)) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Bijection& phi, const LabeledDigraph& g, const LabeledDigraph& h,
                    IsoOptions options) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  if (phi.image.size() != g.node_count()) return false;
  std::vector<bool> hit(h.node_count(), false);
  for (NodeIndex w : phi.image) {
    if (w >= h.node_count() || hit[w]) return false;
    hit[w] = true;
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.label(v) != h.label(phi.image[v])) return false;
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    auto j = h.edge_index(phi.image[e.tail], phi.image[e.head]);
    if (!j) return false;
    if (options.match_edge_labels && g.edge_label(i) != h.edge_label(*j)) return false;
  }
  return true;
}

}  // namespace posetdist
