#include "posetdist/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "posetdist/error.hpp"
#include "posetdist/line_digraph.hpp"

namespace posetdist {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b || has_edge(a, b)) return;
  rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  ++edges_;
}

std::size_t BitGraph::degree(std::size_t a) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(a)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

BitGraph BitGraph::from(const UndirectedGraph& g) {
  BitGraph b(g.node_count());
  for (const Edge& e : g.edges()) b.add_edge(e.tail, e.head);
  return b;
}

UndirectedGraph BitGraph::to_undirected() const {
  UndirectedGraph g;
  for (std::size_t v = 0; v < n_; ++v) g.add_node(std::to_string(v));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (has_edge(a, b)) g.add_edge(a, b);
    }
  }
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& s) {
  return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
}

void set_bit(Bits& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& s, std::size_t i) { s[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
bool test_bit(const Bits& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> limit) {
    if (limit) end_ = std::chrono::steady_clock::now() + *limit;
  }
  bool expired() {
    if (!end_ || (++ticks_ & 1023U) != 0) return false;
    return std::chrono::steady_clock::now() > *end_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  std::uint64_t ticks_ = 0;
};

// Branch and bound over a degree-ordered copy of the graph. Coloring follows
// the bitset scheme of San Segundo's BBMC: repeatedly peel maximal
// independent sets off the candidate set in index order.
class CliqueSearch {
 public:
  CliqueSearch(const BitGraph& g, std::optional<std::chrono::milliseconds> limit)
      : n_(g.node_count()), words_((g.node_count() + 63) / 64), limit_(limit) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    position_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
    rows_.assign(n_, Bits(words_, 0));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (g.has_edge(order_[a], order_[b])) set_bit(rows_[a], b);
      }
    }
  }

  std::size_t node_count() const { return n_; }

  Bits full() const {
    Bits p(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set_bit(p, i);
    return p;
  }

  Bits to_internal(const std::vector<std::size_t>& original) const {
    Bits p(words_, 0);
    for (std::size_t v : original) set_bit(p, position_[v]);
    return p;
  }

  std::vector<std::size_t> to_original(const std::vector<std::size_t>& internal) const {
    std::vector<std::size_t> out;
    out.reserve(internal.size());
    for (std::size_t i : internal) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Largest clique inside `p`, serial. Stops early once `target` is reached.
  std::vector<std::size_t> solve(Bits p, std::size_t target) {
    Run run{Deadline(limit_), target, 0, {}, {}, nullptr};
    expand(run, p);
    if (run.timed_out) throw Error(ErrorCode::TimeLimitExceeded, "max clique time limit exceeded");
    return run.best_clique;
  }

  std::vector<std::size_t> solve_parallel(Bits p) {
    std::atomic<std::size_t> shared_best{0};
    std::vector<std::size_t> best_clique;
    bool timed_out = false;

    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    color(p, verts, colors);
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(verts.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      const std::size_t i = static_cast<std::size_t>(m - 1 - j);
      if (colors[i] <= shared_best.load()) continue;
      // Candidates of root branch i: earlier vertices in coloring order.
      Bits sub(words_, 0);
      for (std::size_t k = 0; k < i; ++k) set_bit(sub, verts[k]);
      const std::size_t v = verts[i];
      for (std::size_t w = 0; w < words_; ++w) sub[w] &= rows_[v][w];
      Run run{Deadline(limit_), n_ + 1, 1, {v}, {}, &shared_best};
      run.best = shared_best.load();
      if (!any(sub)) {
        run.best_clique = {v};
        run.best = std::max<std::size_t>(run.best, 1);
      } else {
        expand(run, sub);
      }
#pragma omp critical(posetdist_clique)
      {
        if (run.timed_out) timed_out = true;
        if (!run.best_clique.empty() && run.best_clique.size() > best_clique.size()) {
          best_clique = run.best_clique;
        }
        if (best_clique.size() > shared_best.load()) shared_best.store(best_clique.size());
      }
    }
    if (timed_out) throw Error(ErrorCode::TimeLimitExceeded, "max clique time limit exceeded");
    return best_clique;
  }

 private:
  struct Run {
    Deadline deadline;
    std::size_t target;
    std::size_t best;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best_clique;
    std::atomic<std::size_t>* shared;
    bool timed_out = false;
    bool done = false;
  };

  void color(const Bits& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    Bits uncolored = p;
    std::size_t k = 0;
    while (any(uncolored)) {
      ++k;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          clear_bit(q, v);
          clear_bit(uncolored, v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~rows_[v][x];
          verts.push_back(v);
          colors.push_back(k);
        }
      }
    }
  }

  void expand(Run& run, Bits& p) {
    if (run.done) return;
    if (run.deadline.expired()) {
      run.timed_out = run.done = true;
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    color(p, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      std::size_t bound = run.best;
      if (run.shared != nullptr) bound = std::max(bound, run.shared->load(std::memory_order_relaxed));
      if (run.current.size() + colors[i] <= bound) return;
      const std::size_t v = verts[i];
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & rows_[v][w];
      run.current.push_back(v);
      if (!any(next)) {
        if (run.current.size() > run.best) {
          run.best = run.current.size();
          run.best_clique = run.current;
          if (run.shared != nullptr) {
            std::size_t seen = run.shared->load();
            while (seen < run.best && !run.shared->compare_exchange_weak(seen, run.best)) {
            }
          }
          if (run.best >= run.target) run.done = true;
        }
      } else {
        expand(run, next);
      }
      run.current.pop_back();
      if (run.done) return;
      clear_bit(p, v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::optional<std::chrono::milliseconds> limit_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<Bits> rows_;
};

// Smallest maximum clique in lexicographic order of original indices.
std::vector<std::size_t> lexicographic_clique(const BitGraph& g, CliqueSearch& search,
                                              std::size_t size) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> chosen;
  std::vector<bool> candidate(n, true);
  for (std::size_t v = 0; v < n && chosen.size() < size; ++v) {
    if (!candidate[v]) continue;
    const std::size_t need = size - chosen.size() - 1;
    std::vector<std::size_t> rest;
    for (std::size_t w = v + 1; w < n; ++w) {
      if (candidate[w] && g.has_edge(v, w)) rest.push_back(w);
    }
    bool ok = need == 0;
    if (!ok && rest.size() >= need) {
      ok = search.solve(search.to_internal(rest), need).size() >= need;
    }
    if (!ok) continue;
    chosen.push_back(v);
    for (std::size_t w = 0; w < n; ++w) {
      if (w <= v || !g.has_edge(v, w)) candidate[w] = false;
    }
  }
  return chosen;
}

void bron_kerbosch(const BitGraph& g, Bits p, Bits x, std::size_t depth, std::size_t& best) {
  if (!any(p) && !any(x)) {
    best = std::max(best, depth);
    return;
  }
  const std::size_t words = p.size();
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!test_bit(p, v)) continue;
    Bits np(words);
    Bits nx(words);
    const auto row = g.row(v);
    for (std::size_t w = 0; w < words; ++w) {
      np[w] = p[w] & row[w];
      nx[w] = x[w] & row[w];
    }
    bron_kerbosch(g, np, nx, depth + 1, best);
    clear_bit(p, v);
    set_bit(x, v);
  }
}

}  // namespace

std::vector<std::size_t> max_clique(const BitGraph& g, CliqueOptions options) {
  if (g.node_count() == 0) return {};
  CliqueSearch search(g, options.time_limit);
  std::vector<std::size_t> internal = options.parallel
                                          ? search.solve_parallel(search.full())
                                          : search.solve(search.full(), g.node_count() + 1);
  if (options.lexicographic_witness) {
    return lexicographic_clique(g, search, internal.size());
  }
  return search.to_original(internal);
}

std::vector<NodeIndex> max_clique(const UndirectedGraph& g, CliqueOptions options) {
  return max_clique(BitGraph::from(g), options);
}

std::size_t max_clique_size_reference(const BitGraph& g) {
  const std::size_t words = g.words();
  Bits p(words, 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) set_bit(p, v);
  std::size_t best = 0;
  bron_kerbosch(g, p, Bits(words, 0), 0, best);
  return best;
}

CompatibilityGraph compatibility_graph(const LabeledDigraph& g, const LabeledDigraph& h,
                                       bool match_edge_labels) {
  std::map<std::string, int> edge_labels;
  auto dense = [&](const LabeledDigraph& d) {
    const std::size_t n = d.node_count();
    std::vector<int> adj(n * n, -1);
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      const Edge& e = d.edges()[i];
      int id = 0;
      if (match_edge_labels) {
        id = edge_labels.emplace(d.edge_label(i), static_cast<int>(edge_labels.size())).first->second;
      }
      adj[e.tail * n + e.head] = id;
    }
    return adj;
  };
  const auto ga = dense(g);
  const auto ha = dense(h);
  const std::size_t gn = g.node_count();
  const std::size_t hn = h.node_count();

  CompatibilityGraph c;
  for (NodeIndex a = 0; a < gn; ++a) {
    for (NodeIndex b = 0; b < hn; ++b) {
      if (g.label(a) == h.label(b)) c.pairs.emplace_back(a, b);
    }
  }
  c.graph = BitGraph(c.pairs.size());
  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const auto [n, n2] = c.pairs[k];
    for (std::size_t l = k + 1; l < c.pairs.size(); ++l) {
      const auto [m, m2] = c.pairs[l];
      if (n == m || n2 == m2) continue;
      if (ga[n * gn + m] == ha[n2 * hn + m2] && ga[m * gn + n] == ha[m2 * hn + n2]) {
        c.graph.add_edge(k, l);
      }
    }
  }
  return c;
}

McisResult mcis(const LabeledDigraph& g, const LabeledDigraph& h, CliqueOptions options) {
  const CompatibilityGraph c = compatibility_graph(g, h);
  McisResult r;
  for (std::size_t k : max_clique(c.graph, options)) r.pairs.push_back(c.pairs[k]);
  std::sort(r.pairs.begin(), r.pairs.end());
  r.size = r.pairs.size();
  return r;
}

DmcesOutcome dmces_via_clique(const LabeledDigraph& g, const LabeledDigraph& h,
                              CliqueOptions options) {
  require_wso(g, "first graph");
  require_wso(h, "second graph");
  const LabeledDigraph lg = extended_line_digraph(g).as_digraph();
  const LabeledDigraph lh = extended_line_digraph(h).as_digraph();
  const McisResult common = mcis(lg, lh, options);

  // Line-digraph node i is source edge i, so the clique pairs edges.
  std::map<NodeIndex, NodeIndex> forward;
  std::map<NodeIndex, NodeIndex> backward;
  auto bind = [&](NodeIndex a, NodeIndex b) {
    const auto [fit, fnew] = forward.emplace(a, b);
    const auto [bit, bnew] = backward.emplace(b, a);
    if (fit->second != b || bit->second != a) {
      throw std::logic_error("edge correspondence does not induce a node injection");
    }
  };
  for (const auto& [ge, he] : common.pairs) {
    bind(g.edges()[ge].tail, h.edges()[he].tail);
    bind(g.edges()[ge].head, h.edges()[he].head);
  }
  DmcesOutcome out;
  out.solver = Solver::Clique;
  out.witness.pairs.assign(forward.begin(), forward.end());
  out.matched_edges = matched_edges(g, h, out.witness);
  out.value = out.matched_edges.size();
  if (out.value != common.size) {
    throw std::logic_error("clique size and witness score disagree");
  }
  return out;
}

}  // namespace posetdist
