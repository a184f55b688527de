#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "posetdist/graph.hpp"

namespace posetdist {

enum class InstanceKind { Wso, Closure, PathClosure };

std::string_view to_string(InstanceKind kind);
/// Accepts "wso", "closure", "path-closure".
std::optional<InstanceKind> parse_instance_kind(std::string_view name);

struct GenerateParams {
  InstanceKind kind = InstanceKind::Wso;
  std::size_t nodes = 6;
  std::size_t labels = 2;
  double density = 0.4;
  std::uint64_t seed = 0;
};

/// Random instance, identical for identical parameters on every platform.
///  - Wso: each node pair becomes an edge with probability `density`, in a
///    random direction.
///  - Closure: random DAG closed transitively.
///  - PathClosure: each label class is first linked into a chain, extra
///    edges respect the same global order, then the result is closed.
/// Draws are repeated until the result is weakly connected. Node ids are
/// zero-padded ("v0".."v9", "v00".."v11", ...) and labels are "a", "b", ...
/// Throws Error(InfeasibleParameters) for nodes < 2, labels < 1, a density
/// outside [0, 1], or when no connected draw appears within the retry cap.
LabeledDigraph generate_instance(const GenerateParams& params);

}  // namespace posetdist
