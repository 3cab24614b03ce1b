#pragma once

#include <cstdint>
#include <vector>

#include "oddbic/graph.hpp"

namespace oddbic {

inline constexpr int kMaxEnumerationOrder = 10;

// Canonical adjacency code: the largest upper-triangle bit string over all
// labellings compatible with an iterated degree refinement. Isomorphic
// graphs get equal codes. Requires n <= kMaxEnumerationOrder.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// One representative per isomorphism class of graphs on n vertices, built by
// vertex augmentation. Sorted by canonical code.
std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace oddbic
