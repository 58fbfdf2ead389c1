#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace realreg::detail {

/// Strongly connected components (iterative Tarjan). Component ids are
/// assigned in reverse topological order of the condensation: edges only go
/// from higher ids to lower-or-equal ids.
struct SccResult {
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
  /// Component contains a cycle (size > 1 or a self-loop).
  std::vector<bool> nontrivial;
};

SccResult strongly_connected_components(const std::vector<std::vector<std::uint32_t>>& successors);

/// Nodes reachable from `sources` (inclusive).
std::vector<bool> reachable(const std::vector<std::vector<std::uint32_t>>& successors,
                            const std::vector<std::uint32_t>& sources);

}  // namespace realreg::detail
