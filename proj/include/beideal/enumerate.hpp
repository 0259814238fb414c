#pragma once

#include <cstdint>
#include <vector>

#include "beideal/graph.hpp"

namespace bei {

/// Upper-triangle adjacency bits (column-major, same pair order as graph6)
/// packed MSB-first, minimized over all vertex permutations. Two graphs on
/// equally many vertices are isomorphic iff their canonical bits agree.
/// Practical for n <= 8 (branch-and-bound over permutations).
std::uint64_t canonical_bits(const Graph& g);

/// Rebuild the canonical representative from its bit form.
Graph graph_from_bits(int n, std::uint64_t bits);

/// All connected graphs on n vertices, one canonical representative per
/// isomorphism class, sorted by canonical bits. 3 <= n <= 8.
std::vector<Graph> enumerate_connected(int n);

}  // namespace bei
