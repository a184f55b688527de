#include "posetdist/dmces.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "posetdist/clique.hpp"
#include "posetdist/error.hpp"

namespace posetdist {

LabelBudget label_budget(const LabeledDigraph& g, const LabeledDigraph& h) {
  std::map<std::string, std::size_t> in_g;
  std::map<std::string, std::size_t> in_h;
  for (const auto& l : g.labels()) ++in_g[l];
  for (const auto& l : h.labels()) ++in_h[l];
  LabelBudget b;
  for (const auto& [label, count] : in_g) {
    const auto it = in_h.find(label);
    const std::size_t n = it == in_h.end() ? 0 : std::min(count, it->second);
    b.per_label[label] = n;
    b.total += n;
  }
  for (const auto& [label, count] : in_h) b.per_label.emplace(label, 0);
  return b;
}

namespace {

enum class Mode { Brute, Alg1, Alg2, Alg3 };

constexpr long kSkip = -1;

// Read-only view of an instance shared by all search workers.
struct Problem {
  Problem(const LabeledDigraph& g_, const LabeledDigraph& h_, Mode mode_)
      : g(g_), h(h_), mode(mode_), gn(g_.node_count()), hn(h_.node_count()) {
    std::unordered_map<std::string, int> ids;
    auto intern = [&](const std::string& l) {
      return ids.emplace(l, static_cast<int>(ids.size())).first->second;
    };
    for (NodeIndex v = 0; v < gn; ++v) glabel.push_back(intern(g.label(v)));
    for (NodeIndex v = 0; v < hn; ++v) hlabel.push_back(intern(h.label(v)));
    labels = ids.size();

    gadj.assign(gn * gn, 0);
    hadj.assign(hn * hn, 0);
    for (const Edge& e : g.edges()) gadj[e.tail * gn + e.head] = 1;
    for (const Edge& e : h.edges()) hadj[e.tail * hn + e.head] = 1;
    gneighbors.resize(gn);
    for (NodeIndex a = 0; a < gn; ++a) {
      for (NodeIndex b = 0; b < gn; ++b) {
        if (a != b && (gedge(a, b) || gedge(b, a))) gneighbors[a].push_back(b);
      }
    }

    // Edge classes keyed by (tail label, head label); only classes present
    // in g matter because no other h edge can ever be matched.
    std::map<std::pair<int, int>, int> classes;
    gincident.resize(gn);
    hincident.resize(hn);
    for (const Edge& e : g.edges()) {
      const auto key = std::pair{glabel[e.tail], glabel[e.head]};
      const int c = classes.emplace(key, static_cast<int>(classes.size())).first->second;
      gincident[e.tail].push_back({e.head, c, 0});
      if (e.head != e.tail) gincident[e.head].push_back({e.tail, c, 1});
    }
    edge_classes = classes.size();
    gclass_count.assign(edge_classes, 0);
    hclass_count.assign(edge_classes, 0);
    for (const Edge& e : g.edges()) {
      ++gclass_count[static_cast<std::size_t>(classes.at({glabel[e.tail], glabel[e.head]}))];
    }
    for (const Edge& e : h.edges()) {
      const auto it = classes.find({hlabel[e.tail], hlabel[e.head]});
      if (it == classes.end()) continue;
      ++hclass_count[static_cast<std::size_t>(it->second)];
      hincident[e.tail].push_back({e.head, it->second, 0});
      if (e.head != e.tail) hincident[e.head].push_back({e.tail, it->second, 1});
    }

    candidates.resize(labels);
    std::vector<std::size_t> gcount(labels, 0);
    for (NodeIndex v = 0; v < hn; ++v) candidates[static_cast<std::size_t>(hlabel[v])].push_back(v);
    for (NodeIndex v = 0; v < gn; ++v) ++gcount[static_cast<std::size_t>(glabel[v])];
    final_count.resize(labels);
    for (std::size_t l = 0; l < labels; ++l) final_count[l] = std::min(gcount[l], candidates[l].size());

    if (mode == Mode::Alg2 || mode == Mode::Alg3) {
      order = topological_sort(g);
    } else {
      order.resize(gn);
      for (NodeIndex v = 0; v < gn; ++v) order[v] = v;
    }
    position.resize(gn);
    for (std::size_t i = 0; i < gn; ++i) position[order[i]] = i;

    chains = mode == Mode::Alg3 || (mode == Mode::Alg2 && has_label_paths(g) && has_label_paths(h));
    if (chains) {
      gchain.resize(labels);
      hchain.resize(labels);
      hchain_pos.assign(hn, 0);
      for (NodeIndex v : order) gchain[static_cast<std::size_t>(glabel[v])].push_back(v);
      for (NodeIndex v : topological_sort(h)) {
        auto& chain = hchain[static_cast<std::size_t>(hlabel[v])];
        hchain_pos[v] = chain.size();
        chain.push_back(v);
      }
    }
  }

  bool gedge(NodeIndex a, NodeIndex b) const { return gadj[a * gn + b] != 0; }
  bool hedge(NodeIndex a, NodeIndex b) const { return hadj[a * hn + b] != 0; }

  struct Incident {
    NodeIndex other;
    int edge_class;
    int inbound;  // 0 for an edge leaving this node, 1 for one entering it
  };

  const LabeledDigraph& g;
  const LabeledDigraph& h;
  Mode mode;
  std::size_t gn;
  std::size_t hn;
  std::size_t labels = 0;
  std::size_t edge_classes = 0;
  std::vector<int> glabel;
  std::vector<int> hlabel;
  std::vector<char> gadj;
  std::vector<char> hadj;
  std::vector<std::vector<NodeIndex>> gneighbors;
  std::vector<std::vector<Incident>> gincident;
  std::vector<std::vector<Incident>> hincident;
  std::vector<long> gclass_count;
  std::vector<long> hclass_count;
  std::vector<std::vector<NodeIndex>> candidates;
  std::vector<std::size_t> final_count;
  std::vector<NodeIndex> order;
  std::vector<std::size_t> position;
  // Set when every label class of both graphs is a chain and the mode
  // forbids twisted pairs; same-label images then increase along the chain.
  bool chains = false;
  // Label classes listed bottom to top, and each h node's rank in its class.
  std::vector<std::vector<NodeIndex>> gchain;
  std::vector<std::vector<NodeIndex>> hchain;
  std::vector<std::size_t> hchain_pos;
};

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> limit) {
    if (limit) end_ = std::chrono::steady_clock::now() + *limit;
  }
  void check() {
    if (!end_ || (++ticks_ & 1023U) != 0) return;
    if (std::chrono::steady_clock::now() > *end_) {
      throw Error(ErrorCode::TimeLimitExceeded, "DMCES search time limit exceeded");
    }
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  std::uint64_t ticks_ = 0;
};

// Depth-first search over decisions for order[0], order[1], ... Each
// decision maps the node to a free image or skips it. All bookkeeping is
// incremental and undone on backtrack.
//
// Bound invariant: open_g_[c] counts edges of class c in g whose endpoints
// are both still matchable (matched or undecided) with at least one
// undecided; open_h_[c] counts edges of class c in h with no excluded
// endpoint and at least one free endpoint. Every edge pair matched below
// the current node is drawn from both pools.
class Searcher {
 public:
  Searcher(const Problem& p, const SearchOptions& options, std::atomic<long>* shared)
      : p_(p), pruning_(options.bound_pruning), deadline_(options.time_limit), shared_(shared) {
    image_.assign(p.gn, kSkip);
    used_.assign(p.hn, 0);
    in_y_.assign(p.hn, 0);
    matched_.assign(p.labels, 0);
    remaining_.assign(p.labels, 0);
    y_count_.assign(p.labels, 0);
    matched_by_label_.resize(p.labels);
    for (NodeIndex v = 0; v < p.gn; ++v) ++remaining_[label(v)];
    open_g_ = p.gclass_count;
    open_h_ = p.hclass_count;
    deg_g_.assign(p.gn * p.labels * 2, 0);
    deg_h_.assign(p.hn * p.labels * 2, 0);
    for (NodeIndex m = 0; m < p.gn; ++m) {
      for (const auto& e : p.gincident[m]) {
        if (e.other != m) ++deg_g_[slot(m, label(e.other), e.inbound)];
      }
    }
    for (NodeIndex x = 0; x < p.hn; ++x) {
      for (const auto& e : p.hincident[x]) {
        if (e.other != x) ++deg_h_[slot(x, label_h(e.other), e.inbound)];
      }
    }
    gain_.assign(p.gn * p.hn, 0);
  }

  std::vector<long> choices(std::size_t k) const {
    const NodeIndex m = p_.order[k];
    const std::size_t l = label(m);
    std::vector<long> out;
    for (NodeIndex n : p_.candidates[l]) {
      if (used_[n] != 0) continue;
      if (p_.mode == Mode::Alg3 && in_y_[n] != 0) continue;
      if ((p_.mode == Mode::Alg2 || p_.mode == Mode::Alg3) && crosses(m, n)) continue;
      out.push_back(static_cast<long>(n));
    }
    if (p_.mode == Mode::Brute || matched_[l] + remaining_[l] > p_.final_count[l]) {
      out.push_back(kSkip);
    }
    return out;
  }

  // Applies a decision for order[k]. Returns false, leaving the state
  // untouched, when the decision violates the image budget of Y.
  bool apply(std::size_t k, long choice) {
    const NodeIndex m = p_.order[k];
    const std::size_t l = label(m);
    Frame f;
    f.score = score_;
    if (choice == kSkip) {
      close_g(m, k, true, -1);
      leave_fresh_g(m, k, -1);
    } else {
      const auto n = static_cast<NodeIndex>(choice);
      // With chain classes an alg2 image can never again lie below n, so
      // those nodes are dropped from the bound pools without a budget check.
      if (p_.chains) {
        for (NodeIndex v : p_.h.in_neighbors(n)) {
          if (used_[v] == 0 && in_y_[v] == 0 && label_h(v) == l) f.new_y.push_back(v);
        }
        if (p_.mode == Mode::Alg3 &&
            p_.final_count[l] > p_.candidates[l].size() - y_count_[l] - f.new_y.size()) {
          return false;
        }
        for (NodeIndex v : f.new_y) exclude(v);
        y_count_[l] += f.new_y.size();
      }
      std::size_t gain = p_.gedge(m, m) && p_.hedge(n, n) ? 1 : 0;
      for (NodeIndex u : p_.gneighbors[m]) {
        if (image_[u] == kSkip) continue;
        const auto v = static_cast<NodeIndex>(image_[u]);
        if (p_.gedge(u, m) && p_.hedge(v, n)) ++gain;
        if (p_.gedge(m, u) && p_.hedge(n, v)) ++gain;
      }
      score_ += gain;
      close_g(m, k, false, -1);
      leave_fresh_g(m, k, -1);
      occupy(n, -1);
      leave_fresh_h(n, -1);
      propagate_gain(m, n, k, +1);
      image_[m] = choice;
      used_[n] = 1;
      matched_by_label_[l].push_back(m);
      ++matched_[l];
    }
    --remaining_[l];
    frames_.push_back(std::move(f));
    return true;
  }

  void undo(std::size_t k, long choice) {
    const NodeIndex m = p_.order[k];
    const std::size_t l = label(m);
    Frame& f = frames_.back();
    if (choice == kSkip) {
      leave_fresh_g(m, k, +1);
      close_g(m, k, true, +1);
    } else {
      const auto n = static_cast<NodeIndex>(choice);
      used_[n] = 0;
      image_[m] = kSkip;
      matched_by_label_[l].pop_back();
      --matched_[l];
      propagate_gain(m, n, k, -1);
      leave_fresh_h(n, +1);
      occupy(n, +1);
      leave_fresh_g(m, k, +1);
      close_g(m, k, false, +1);
      for (auto it = f.new_y.rbegin(); it != f.new_y.rend(); ++it) restore(*it);
      y_count_[l] -= f.new_y.size();
    }
    ++remaining_[l];
    score_ = f.score;
    frames_.pop_back();
  }

  void explore(std::size_t k) {
    deadline_.check();
    if (guided_ && ++visited_ > budget_) throw BudgetSpent{};
    if (k == p_.order.size()) {
      if (!found_ || static_cast<long>(score_) > best_) record();
      return;
    }
    if (pruning_ && prunable(k)) return;
    std::vector<long> options = choices(k);
    if (guided_) {
      const long* row = gain_.data() + p_.order[k] * p_.hn;
      std::stable_sort(options.begin(), options.end(), [&](long a, long b) {
        const long ga = a == kSkip ? -1 : row[a];
        const long gb = b == kSkip ? -1 : row[b];
        return ga > gb;
      });
    }
    for (long choice : options) {
      if (!apply(k, choice)) continue;
      explore(k + 1);
      undo(k, choice);
    }
  }

  // Depth-first dive that tries the most profitable image first and stops
  // after `budget` visited nodes. Returns the best score seen, or -1. The
  // searcher must not be reused afterwards.
  long dive(std::uint64_t budget) {
    guided_ = true;
    budget_ = budget;
    try {
      explore(0);
    } catch (const BudgetSpent&) {
    }
    return found_ ? best_ : -1;
  }

  // Subtrees whose bound is below `floor` are discarded. Any optimum is at
  // least `floor`, so this never changes the first optimal leaf.
  void set_floor(long floor) { floor_ = floor; }

  void collect(std::size_t k, std::size_t depth, std::vector<long>& path,
               std::vector<std::vector<long>>& out) {
    if (k == depth || k == p_.order.size()) {
      out.push_back(path);
      return;
    }
    for (long choice : choices(k)) {
      if (!apply(k, choice)) continue;
      path.push_back(choice);
      collect(k + 1, depth, path, out);
      path.pop_back();
      undo(k, choice);
    }
  }

  bool found() const { return found_; }
  long best() const { return best_; }
  const NodeMatching& witness() const { return witness_; }

 private:
  struct BudgetSpent {};

  struct Frame {
    std::size_t score = 0;
    std::vector<NodeIndex> new_y;
  };

  std::size_t label(NodeIndex v) const { return static_cast<std::size_t>(p_.glabel[v]); }
  std::size_t label_h(NodeIndex v) const { return static_cast<std::size_t>(p_.hlabel[v]); }

  // Deciding m closes its g edges towards matched nodes; skipping it also
  // closes those towards undecided nodes. Called with image_[m] unset.
  void close_g(NodeIndex m, std::size_t k, bool skip, long delta) {
    for (const auto& [u, c, dir] : p_.gincident[m]) {
      if (u == m || image_[u] != kSkip || (skip && p_.position[u] > k)) {
        open_g_[static_cast<std::size_t>(c)] += delta;
      }
    }
  }

  // Using n closes its h edges towards used nodes. Called with used_[n]
  // unset.
  void occupy(NodeIndex n, long delta) {
    for (const auto& [x, c, dir] : p_.hincident[n]) {
      if (x == n || used_[x] != 0) open_h_[static_cast<std::size_t>(c)] += delta;
    }
  }

  // Excluding v closes all of its h edges still open.
  void exclude(NodeIndex v) {
    for (const auto& [x, c, dir] : p_.hincident[v]) {
      if (x == v || in_y_[x] == 0) --open_h_[static_cast<std::size_t>(c)];
    }
    leave_fresh_h(v, -1);
    in_y_[v] = 1;
  }

  void restore(NodeIndex v) {
    in_y_[v] = 0;
    leave_fresh_h(v, +1);
    for (const auto& [x, c, dir] : p_.hincident[v]) {
      if (x == v || in_y_[x] == 0) ++open_h_[static_cast<std::size_t>(c)];
    }
  }

  bool free_h(NodeIndex x) const { return used_[x] == 0 && in_y_[x] == 0; }

  std::size_t slot(NodeIndex v, std::size_t l, int inbound) const {
    return (v * p_.labels + l) * 2 + static_cast<std::size_t>(inbound);
  }

  // deg_g_ counts, per node, label and direction, the g edges towards
  // undecided nodes; deciding m removes m from its neighbours' counts.
  void leave_fresh_g(NodeIndex m, std::size_t, long delta) {
    for (const auto& [u, c, dir] : p_.gincident[m]) {
      if (u != m) deg_g_[slot(u, label(m), 1 - dir)] += delta;
    }
  }

  // deg_h_ counts the same towards free h nodes; n stops being free.
  void leave_fresh_h(NodeIndex n, long delta) {
    for (const auto& [x, c, dir] : p_.hincident[n]) {
      if (x != n) deg_h_[slot(x, label_h(n), 1 - dir)] += delta;
    }
  }

  // Twice the edges that mapping undecided w to x can still contribute:
  // preserved edges towards matched nodes count twice, edges towards
  // undecided nodes once (they are seen again from the other endpoint).
  long weight(NodeIndex w, NodeIndex x) const {
    long total = 2 * gain_[w * p_.hn + x];
    const long* dg = deg_g_.data() + w * p_.labels * 2;
    const long* dh = deg_h_.data() + x * p_.labels * 2;
    for (std::size_t i = 0; i < p_.labels * 2; ++i) total += std::min(dg[i], dh[i]);
    return total;
  }

  // gain_[w, x] counts edges between undecided w and matched nodes that
  // mapping w to x would preserve.
  void propagate_gain(NodeIndex m, NodeIndex n, std::size_t k, long delta) {
    for (NodeIndex w : p_.gneighbors[m]) {
      if (p_.position[w] <= k) continue;
      const bool in = p_.gedge(m, w);
      const bool out = p_.gedge(w, m);
      long* row = gain_.data() + w * p_.hn;
      for (NodeIndex x : p_.candidates[label(w)]) {
        const long d = (in && p_.hedge(n, x) ? 1 : 0) + (out && p_.hedge(x, n) ? 1 : 0);
        row[x] += delta * d;
      }
    }
  }

  // Image n would twist m with an earlier matched predecessor of equal label.
  bool crosses(NodeIndex m, NodeIndex n) const {
    for (NodeIndex u : matched_by_label_[label(m)]) {
      if (p_.gedge(u, m) && p_.hedge(n, static_cast<NodeIndex>(image_[u]))) return true;
    }
    return false;
  }

  // Every leaf matches exactly final_count[l] nodes of label l, so a label
  // that can no longer reach it leaves the subtree without leaves.
  bool starved() const {
    for (std::size_t l = 0; l < p_.labels; ++l) {
      std::size_t open = 0;
      if (p_.chains) {
        std::size_t from = 0;
        if (!matched_by_label_[l].empty()) {
          from = p_.hchain_pos[static_cast<NodeIndex>(image_[matched_by_label_[l].back()])] + 1;
        }
        for (std::size_t i = from; i < p_.hchain[l].size(); ++i) open += free_h(p_.hchain[l][i]) ? 1 : 0;
      } else {
        for (NodeIndex x : p_.candidates[l]) open += free_h(x) ? 1 : 0;
      }
      if (matched_[l] + std::min(remaining_[l], open) < p_.final_count[l]) return true;
    }
    return false;
  }

  bool prunable(std::size_t k) const {
    if (starved()) return true;
    long by_class = 0;
    for (std::size_t c = 0; c < p_.edge_classes; ++c) by_class += std::min(open_g_[c], open_h_[c]);
    const long base = static_cast<long>(score_);
    if (!beats(base + by_class)) return true;
    long twice = 0;
    if (p_.chains) {
      for (std::size_t l = 0; l < p_.labels && twice < 2 * by_class; ++l) twice += chain_gain(l, k);
    } else {
      for (std::size_t i = k; i < p_.order.size() && twice < 2 * by_class; ++i) {
        const NodeIndex w = p_.order[i];
        long top = 0;
        for (NodeIndex x : p_.candidates[label(w)]) {
          if (free_h(x)) top = std::max(top, weight(w, x));
        }
        twice += top;
      }
    }
    return !beats(base + std::min(by_class, twice / 2));
  }

  // Images within a chain class increase along the chain, so twice the
  // remaining gain of its undecided nodes is at most a monotone alignment
  // of weights against the free images above the current top image.
  long chain_gain(std::size_t l, std::size_t k) const {
    free_cols_.clear();
    std::size_t from = 0;
    if (!matched_by_label_[l].empty()) {
      from = p_.hchain_pos[static_cast<NodeIndex>(image_[matched_by_label_[l].back()])] + 1;
    }
    for (std::size_t i = from; i < p_.hchain[l].size(); ++i) {
      const NodeIndex x = p_.hchain[l][i];
      if (free_h(x)) free_cols_.push_back(x);
    }
    const std::size_t cols = free_cols_.size();
    if (cols == 0) return 0;
    dp_prev_.assign(cols + 1, 0);
    dp_next_.assign(cols + 1, 0);
    for (NodeIndex w : p_.gchain[l]) {
      if (p_.position[w] < k) continue;
      for (std::size_t j = 1; j <= cols; ++j) {
        dp_next_[j] = std::max({dp_next_[j - 1], dp_prev_[j], dp_prev_[j - 1] + weight(w, free_cols_[j - 1])});
      }
      std::swap(dp_prev_, dp_next_);
    }
    return dp_prev_[cols];
  }

  bool beats(long bound) const {
    if (bound < floor_) return false;
    if (found_ && bound <= best_) return false;
    return shared_ == nullptr || bound >= shared_->load(std::memory_order_relaxed);
  }

  void record() {
    found_ = true;
    best_ = static_cast<long>(score_);
    witness_.pairs.clear();
    for (NodeIndex v = 0; v < p_.gn; ++v) {
      if (image_[v] != kSkip) witness_.pairs.emplace_back(v, static_cast<NodeIndex>(image_[v]));
    }
    if (shared_ != nullptr) {
      long seen = shared_->load();
      while (seen < best_ && !shared_->compare_exchange_weak(seen, best_)) {
      }
    }
  }

  const Problem& p_;
  bool pruning_;
  Deadline deadline_;
  std::atomic<long>* shared_;

  std::vector<long> image_;
  std::vector<char> used_;
  std::vector<char> in_y_;
  std::vector<std::vector<NodeIndex>> matched_by_label_;
  std::vector<std::size_t> matched_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> y_count_;
  std::vector<long> open_g_;
  std::vector<long> open_h_;
  std::vector<long> deg_g_;
  std::vector<long> deg_h_;
  std::vector<long> gain_;
  mutable std::vector<NodeIndex> free_cols_;
  mutable std::vector<long> dp_prev_;
  mutable std::vector<long> dp_next_;
  std::vector<Frame> frames_;
  std::size_t score_ = 0;
  long floor_ = -1;
  bool guided_ = false;
  std::uint64_t budget_ = 0;
  std::uint64_t visited_ = 0;

  bool found_ = false;
  long best_ = -1;
  NodeMatching witness_;
};

DmcesOutcome finish(const Problem& p, bool found, NodeMatching witness, Solver solver) {
  if (!found) throw std::logic_error("search exhausted without a feasible matching");
  DmcesOutcome out;
  out.solver = solver;
  out.witness = std::move(witness);
  out.matched_edges = matched_edges(p.g, p.h, out.witness);
  out.value = out.matched_edges.size();
  return out;
}

constexpr std::uint64_t kDiveBudget = 20000;

long initial_floor(const Problem& p, const SearchOptions& options) {
  if (!options.bound_pruning || p.mode == Mode::Brute) return -1;
  Searcher diver(p, options, nullptr);
  return diver.dive(kDiveBudget);
}

DmcesOutcome run_serial(const Problem& p, const SearchOptions& options, Solver solver) {
  Searcher s(p, options, nullptr);
  s.set_floor(initial_floor(p, options));
  s.explore(0);
  return finish(p, s.found(), s.witness(), solver);
}

std::size_t thread_count() {
#ifdef _OPENMP
  return static_cast<std::size_t>(omp_get_max_threads());
#else
  return 1;
#endif
}

// Splits the tree at a fixed depth and searches the subtrees concurrently.
// The reported witness is the one from the earliest subtree (in serial
// exploration order) that attains the optimum, which is the serial witness.
DmcesOutcome run_parallel(const Problem& p, const SearchOptions& options, Solver solver) {
  const std::size_t want = 8 * thread_count();
  std::vector<std::vector<long>> frontier;
  std::size_t depth = 0;
  {
    Searcher seed(p, options, nullptr);
    while (true) {
      frontier.clear();
      std::vector<long> path;
      seed.collect(0, depth, path, frontier);
      if (frontier.size() >= want || depth >= p.order.size() || depth >= 4) break;
      ++depth;
    }
  }

  const long floor = initial_floor(p, options);
  std::atomic<long> shared{-1};
  std::atomic<bool> timed_out{false};
  const auto m = static_cast<std::ptrdiff_t>(frontier.size());
  std::vector<long> value(frontier.size(), -1);
  std::vector<NodeMatching> witness(frontier.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    if (timed_out.load()) continue;
    const auto idx = static_cast<std::size_t>(i);
    Searcher s(p, options, &shared);
    s.set_floor(floor);
    const std::vector<long>& path = frontier[idx];
    for (std::size_t k = 0; k < path.size(); ++k) s.apply(k, path[k]);
    try {
      s.explore(path.size());
    } catch (const Error&) {
      timed_out.store(true);
      continue;
    }
    if (s.found()) {
      value[idx] = s.best();
      witness[idx] = s.witness();
    }
  }
  if (timed_out.load()) throw Error(ErrorCode::TimeLimitExceeded, "DMCES search time limit exceeded");

  const auto best = std::max_element(value.begin(), value.end());
  if (best == value.end() || *best < 0) return finish(p, false, {}, solver);
  const auto idx = static_cast<std::size_t>(best - value.begin());
  return finish(p, true, witness[idx], solver);
}

DmcesOutcome run(const LabeledDigraph& g, const LabeledDigraph& h, Mode mode,
                 const SearchOptions& options, Solver solver) {
  const Problem p(g, h, mode);
  return options.parallel ? run_parallel(p, options, solver) : run_serial(p, options, solver);
}

}  // namespace

DmcesOutcome dmces_bruteforce(const LabeledDigraph& g, const LabeledDigraph& h,
                              const SearchOptions& options) {
  const std::size_t n = std::max(g.node_count(), h.node_count());
  if (n > options.brute_force_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "brute force is limited to " +
                                                std::to_string(options.brute_force_cap) +
                                                " nodes, got " + std::to_string(n));
  }
  SearchOptions plain = options;
  plain.bound_pruning = false;
  plain.parallel = false;
  return run(g, h, Mode::Brute, plain, Solver::BruteForce);
}

DmcesOutcome dmces_alg1(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options) {
  require_wso(g, "first graph");
  require_wso(h, "second graph");
  return run(g, h, Mode::Alg1, options, Solver::Alg1);
}

DmcesOutcome dmces_alg2(const PosetDigraph& g, const PosetDigraph& h, const SearchOptions& options) {
  return run(g.graph(), h.graph(), Mode::Alg2, options, Solver::Alg2);
}

DmcesOutcome dmces_alg3(const PosetDigraph& g, const PosetDigraph& h, const SearchOptions& options) {
  if (!has_label_paths(g.graph()) || !has_label_paths(h.graph())) {
    throw Error(ErrorCode::LabelClassNotPath, "a label class is not a chain");
  }
  return run(g.graph(), h.graph(), Mode::Alg3, options, Solver::Alg3);
}

DmcesOutcome dmces_alg2(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options) {
  return dmces_alg2(PosetDigraph::from_graph(g), PosetDigraph::from_graph(h), options);
}

DmcesOutcome dmces_alg3(const LabeledDigraph& g, const LabeledDigraph& h,
                        const SearchOptions& options) {
  return dmces_alg3(PosetDigraph::from_graph(g), PosetDigraph::from_graph(h), options);
}

Solver select_auto_solver(const LabeledDigraph& g, const LabeledDigraph& h) {
  const PropertyReport a = validate_properties(g);
  const PropertyReport b = validate_properties(h);
  auto poset = [](const PropertyReport& r, const LabeledDigraph& d) {
    return r.wso() && r.is_acyclic && r.is_transitively_closed && d.edge_count() > 0;
  };
  if (poset(a, g) && poset(b, h)) {
    return a.per_label_path && b.per_label_path ? Solver::Alg3 : Solver::Alg2;
  }
  if (g.edge_count() * h.edge_count() <= 10000) return Solver::Clique;
  return Solver::Alg1;
}

DmcesOutcome dmces(const LabeledDigraph& g, const LabeledDigraph& h, Solver solver,
                   const SearchOptions& options) {
  if (solver == Solver::Auto) solver = select_auto_solver(g, h);
  switch (solver) {
    case Solver::BruteForce: return dmces_bruteforce(g, h, options);
    case Solver::Alg1: return dmces_alg1(g, h, options);
    case Solver::Alg2: return dmces_alg2(g, h, options);
    case Solver::Alg3: return dmces_alg3(g, h, options);
    case Solver::Clique:
      return dmces_via_clique(g, h, CliqueOptions{options.parallel, true, options.time_limit});
    case Solver::Auto: break;
  }
  throw std::logic_error("unresolved solver");
}

std::vector<std::pair<NodeIndex, NodeIndex>> respects_order_on_labels(const LabeledDigraph& g,
                                                                      const LabeledDigraph& h,
                                                                      const NodeMatching& phi) {
  validate_matching(g, h, phi);
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (const auto& [a, fa] : phi.pairs) {
    for (const auto& [b, fb] : phi.pairs) {
      if (a == b || g.label(a) != g.label(b)) continue;
      if (g.has_edge(a, b) && h.has_edge(fb, fa)) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeMatching untwist(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi,
                     NodeIndex u, NodeIndex v) {
  const auto twisted = respects_order_on_labels(g, h, phi);
  const bool hit = std::find(twisted.begin(), twisted.end(), std::pair{u, v}) != twisted.end() ||
                   std::find(twisted.begin(), twisted.end(), std::pair{v, u}) != twisted.end();
  if (!hit) throw Error(ErrorCode::PairNotTwisted, "the pair is not twisted under the matching");
  NodeMatching psi = phi;
  NodeIndex* iu = nullptr;
  NodeIndex* iv = nullptr;
  for (auto& [a, b] : psi.pairs) {
    if (a == u) iu = &b;
    if (a == v) iv = &b;
  }
  std::swap(*iu, *iv);
  return psi;
}

}  // namespace posetdist
