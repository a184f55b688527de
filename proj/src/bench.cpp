#include "posetdist/bench.hpp"

#include <chrono>
#include <iomanip>

#include "posetdist/dmces.hpp"
#include "posetdist/io.hpp"

namespace posetdist {

std::vector<Solver> applicable_solvers(InstanceKind kind) {
  std::vector<Solver> s{Solver::BruteForce, Solver::Alg1, Solver::Clique};
  if (kind != InstanceKind::Wso) s.push_back(Solver::Alg2);
  if (kind == InstanceKind::PathClosure) s.push_back(Solver::Alg3);
  return s;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  const std::vector<Solver> solvers =
      config.solvers.empty() ? applicable_solvers(config.kind) : config.solvers;
  std::vector<BenchRow> rows;
  std::uint64_t seed = config.seed;
  for (std::size_t n : config.sizes) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      GenerateParams p{config.kind, n, config.labels, config.density, seed++};
      const LabeledDigraph g = generate_instance(p);
      p.seed = seed++;
      const LabeledDigraph h = generate_instance(p);
      const std::size_t normalizer = std::max(g.edge_count(), h.edge_count());

      std::optional<std::size_t> reference;
      std::string reference_solver;
      for (Solver s : solvers) {
        BenchRow row;
        row.solver = std::string(to_string(s));
        row.n_nodes = n;
        row.n_edges = normalizer;
        if (s == Solver::Clique && g.edge_count() * h.edge_count() > config.clique_product_limit) {
          row.status = "slow";
          rows.push_back(row);
          continue;
        }
        if (s == Solver::BruteForce && n > config.brute_force_cap) {
          row.status = "cap";
          rows.push_back(row);
          continue;
        }
        SearchOptions options;
        options.time_limit = config.time_limit;
        options.brute_force_cap = config.brute_force_cap;
        const auto start = std::chrono::steady_clock::now();
        try {
          row.value = dmces(g, h, s, options).value;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TimeLimitExceeded) throw;
          row.status = "timeout";
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (row.value) {
          if (!reference) {
            reference = row.value;
            reference_solver = row.solver;
          } else if (*reference != *row.value) {
            row.agree = false;
            rows.push_back(row);
            throw SolverDisagreementError(
                reference_solver + " found " + std::to_string(*reference) + " but " + row.solver +
                    " found " + std::to_string(*row.value),
                "first:\n" + to_json(g) + "second:\n" + to_json(h));
          }
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "solver,n_nodes,n_edges,value,elapsed_ms,agree,status\n";
  for (const BenchRow& r : rows) {
    out << r.solver << ',' << r.n_nodes << ',' << r.n_edges << ',';
    if (r.value) out << *r.value;
    out << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << ','
        << (r.agree ? "true" : "false") << ',' << r.status << '\n';
  }
}

}  // namespace posetdist
