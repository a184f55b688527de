#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "posetdist/error.hpp"
#include "posetdist/generate.hpp"
#include "posetdist/matching.hpp"

namespace posetdist {

struct BenchConfig {
  InstanceKind kind = InstanceKind::Closure;
  std::vector<std::size_t> sizes{6};
  std::size_t trials = 5;
  std::size_t labels = 3;
  double density = 0.4;
  std::uint64_t seed = 1;
  /// Solvers to run; empty means every solver applicable to `kind`.
  std::vector<Solver> solvers;
  /// The clique solver is skipped when |D| * |D'| exceeds this.
  std::size_t clique_product_limit = 10000;
  std::size_t brute_force_cap = 10;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct BenchRow {
  std::string solver;
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;  // max(|D|, |D'|)
  std::optional<std::size_t> value;
  double elapsed_ms = 0.0;
  bool agree = true;
  /// "ok", "slow" (clique product limit), "cap" (brute-force size cap) or
  /// "timeout".
  std::string status = "ok";
};

/// Raised when two solvers report different values for one instance.
class SolverDisagreementError : public Error {
 public:
  SolverDisagreementError(const std::string& message, std::string instance)
      : Error(ErrorCode::SolverDisagreement, message), instance_(std::move(instance)) {}
  /// Both graphs as canonical JSON.
  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string instance_;
};

std::vector<Solver> applicable_solvers(InstanceKind kind);

/// Generates `trials` instance pairs per size and runs every selected
/// solver on each. Throws SolverDisagreementError on the first mismatch.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace posetdist
