#pragma once

#include <cstdint>
#include <vector>

namespace edgeideal {

/// Maximum clique by branch and bound with a greedy-coloring bound
/// (Tomita-style). `adjacent[i][j]` must be symmetric with a false diagonal.
/// Returns the clique members ascending. Throws ResourceError once more than
/// `node_budget` search nodes have been expanded.
std::vector<int> maximum_clique(const std::vector<std::vector<bool>>& adjacent, std::uint64_t node_budget);

}  // namespace edgeideal
