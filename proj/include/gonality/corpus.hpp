#pragma once

#include "gonality/graph.hpp"

#include <cstdint>
#include <vector>

namespace gonality {

/// One representative per isomorphism class of simple graphs on n vertices
/// (1 <= n <= 10), as upper-triangle adjacency bitmasks. Intended for small
/// corpora only; the canonical form behind it is exhaustive within the
/// cells of a degree refinement.
std::vector<std::uint64_t> simple_graph_classes(int n);

/// Connected members of simple_graph_classes(n) as graphs.
std::vector<Multigraph> connected_graphs(int n);

/// Canonical upper-triangle bitmask of a simple graph on at most 10 vertices.
std::uint64_t canonical_code(int n, std::uint64_t code);

/// Bit index of pair (i, j), i < j, in a code on n vertices.
int pair_bit(int n, int i, int j);

Multigraph graph_from_code(int n, std::uint64_t code);

} // namespace gonality
