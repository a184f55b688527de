#include "posetdist/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "posetdist/error.hpp"

namespace posetdist {

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Wso: return "wso";
    case InstanceKind::Closure: return "closure";
    case InstanceKind::PathClosure: return "path-closure";
  }
  return "wso";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (InstanceKind k : {InstanceKind::Wso, InstanceKind::Closure, InstanceKind::PathClosure}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

constexpr int kMaxAttempts = 10000;

// The standard distributions are implementation-defined, so draws are
// derived from the raw engine output directly.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

std::string node_id(std::size_t i, std::size_t n) {
  const std::size_t width = std::to_string(n - 1).size();
  std::string digits = std::to_string(i);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

std::string label_name(std::size_t i, std::size_t k) {
  if (k <= 26) return std::string(1, static_cast<char>('a' + i));
  return "l" + std::to_string(i);
}

LabeledDigraph draw_once(const GenerateParams& p, Draw& draw) {
  const std::size_t n = p.nodes;
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = draw.below(p.labels);
  LabeledDigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(node_id(i, n), label_name(label[i], p.labels));

  if (p.kind == InstanceKind::Wso) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!draw.chance(p.density)) continue;
        if (draw.chance(0.5)) {
          g.add_edge(a, b);
        } else {
          g.add_edge(b, a);
        }
      }
    }
    return g;
  }

  // rank[v] is the position of v in a random linear extension.
  const std::vector<std::size_t> by_rank = draw.permutation(n);
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_rank[r]] = r;
  if (p.kind == InstanceKind::PathClosure) {
    std::vector<std::size_t> last(p.labels, n);
    for (std::size_t v : by_rank) {
      if (last[label[v]] != n) g.add_edge(last[label[v]], v);
      last[label[v]] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!draw.chance(p.density)) continue;
      if (rank[a] < rank[b]) {
        g.add_edge(a, b);
      } else {
        g.add_edge(b, a);
      }
    }
  }
  return transitive_closure(g);
}

}  // namespace

LabeledDigraph generate_instance(const GenerateParams& params) {
  if (params.nodes < 2) throw Error(ErrorCode::InfeasibleParameters, "need at least 2 nodes");
  if (params.labels < 1) throw Error(ErrorCode::InfeasibleParameters, "need at least 1 label");
  if (!(params.density >= 0.0 && params.density <= 1.0)) {
    throw Error(ErrorCode::InfeasibleParameters, "density must lie in [0, 1]");
  }
  Draw draw(params.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    LabeledDigraph g = draw_once(params, draw);
    if (is_weakly_connected(g)) return g;
  }
  throw Error(ErrorCode::InfeasibleParameters,
              "no weakly connected instance found; raise the density");
}

}  // namespace posetdist
