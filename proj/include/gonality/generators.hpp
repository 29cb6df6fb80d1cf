#pragma once

#include "gonality/divisor.hpp"
#include "gonality/graph.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);

/// Three disjoint cycles joined in a ring by single transition edges, plus a
/// hub v0 joined to the six transition vertices by subdivided spokes.
///
/// Index i in each array refers to cycle C_{i+1}; positions are vertex
/// offsets along that cycle. Spokes are listed v1-, v1+, v2-, v2+, v3-, v3+.
struct TricycleSpec {
    std::array<int, 3> cycle_length{2, 2, 2};
    std::array<int, 3> minus_position{0, 0, 0};
    std::array<int, 3> plus_position{1, 1, 1};
    std::array<int, 6> spoke_parts{2, 2, 2, 2, 2, 2};
};

/// Layout: the cycles in order, then v0, then the spoke interiors. Tags:
/// "v0" and "transition:1-", "transition:1+", ..., "transition:3+".
Multigraph tricycle(const TricycleSpec& spec);

/// All cycles of length 2 (parallel pairs), spokes subdivided once: 13 vertices, 21 edges.
Multigraph minimal_tricycle();

/// All cycles triangles with adjacent transition vertices: 16 vertices, 24 edges.
Multigraph minimal_simple_tricycle();

/// Tag names of the six transition vertices, in spoke order.
const std::array<std::string, 6>& transition_tags();

/// The six transition vertices of a tagged tricycle (tags looked up under `prefix`).
VertexSet transition_vertices(const Multigraph& g, std::string_view prefix = "");

/// One chip on each transition vertex: degree 6, positive rank.
Divisor transition_divisor(const Multigraph& g, std::string_view prefix = "");

/// The degree-5 divisor on σ₂(G) with two chips on v0 and one on the midpoint
/// of each transition edge. Throws NotATricycle when the tags are missing.
Divisor special_divisor_sigma2(const Multigraph& g, std::string_view prefix = "");

/// Components G_1..G_n (n = |V(H)|) with base vertices w_i; every edge ij of
/// H contributes t parallel w_i-w_j paths.
struct SkewerSpec {
    Multigraph skewer = Multigraph(1, {});
    int t = 1;
    std::vector<Multigraph> components;
    std::vector<Vertex> bases;
    /// Edge count of each skewer path, listed per H-edge (normalized order)
    /// then per copy. Empty means all 1; a single value applies to all.
    std::vector<int> parts;
};

/// Component i occupies a contiguous index block and keeps its tags under
/// the prefix "c<i>:"; w_i also gets "c<i>:base". Skewer path interiors
/// come last.
Multigraph skewered(const SkewerSpec& spec);

/// Vertex index of component vertex v of component i inside skewered(spec).
Vertex skewered_vertex(const SkewerSpec& spec, int component, Vertex v);

/// k minimal simple tricycles skewered along a path at their hubs, with
/// t = 6k parallel paths of two edges each.
SkewerSpec gap_family_spec(int k);
Multigraph gap_family(int k);

/// Sum of the transition divisors of the k components (degree 6k).
Divisor gap_family_divisor(const Multigraph& g, int k);

/// Sum of the components' special divisors on σ₂(G) (degree 5k).
Divisor gap_family_divisor_sigma2(const Multigraph& g, int k);

std::string component_prefix(int i);

} // namespace gonality
