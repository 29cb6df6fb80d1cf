#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

using Vertex = int;

/// Unordered vertex pair; normalized graphs store u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Subset of {0, ..., n-1} with bitset storage.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet all(int universe);

    int universe() const { return universe_; }
    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);
    int size() const;
    bool empty() const;
    VertexSet complement() const;
    bool is_subset_of(const VertexSet& other) const;
    std::vector<Vertex> members() const;

    bool operator==(const VertexSet&) const = default;

private:
    void check(Vertex v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Neighbor {
    Vertex vertex;
    int multiplicity;
};

/// Finite, connected, loopless multigraph on vertices 0..n-1.
///
/// The edge list is normalized on construction (each pair sorted, then the
/// list sorted), so two graphs with the same edge multiset compare and
/// serialize identically. Labels are free-form per-vertex tags separated by
/// '|'; no algorithm reads them except the generator/separator helpers.
class Multigraph {
public:
    Multigraph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Neighbor> neighbors(Vertex v) const;
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    int max_degree() const;
    int multiplicity(Vertex u, Vertex v) const;
    bool is_simple() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    bool has_tag(Vertex v, std::string_view tag) const;
    std::optional<Vertex> find_tag(std::string_view tag) const;
    /// Vertices carrying some tag that starts with `prefix`.
    std::vector<Vertex> tagged_with_prefix(std::string_view prefix) const;

    Multigraph with_labels(std::vector<std::string> labels) const;

    /// Structural equality; labels are ignored.
    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<int> degree_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
};

std::vector<std::string_view> split_tags(std::string_view label);

/// |E| - |V| + 1.
int cyclomatic_number(const Multigraph& g);

/// Number of edges with exactly one endpoint in `a`, parallel edges counted.
int edge_cut(const Multigraph& g, const VertexSet& a);

/// Every component of G - S is a tree attached to each s by at most one edge.
bool is_strong_separator(const Multigraph& g, const VertexSet& s);

/// Each edge becomes a path of k edges. New vertices are appended in
/// normalized-edge order, each path listed from its smaller endpoint.
Multigraph subdivide_uniform(const Multigraph& g, int k);

/// Edge i (normalized order) becomes a path of parts[i] edges.
Multigraph subdivide_edges(const Multigraph& g, std::span<const int> parts);

/// Index in σ_k(G) of the j-th internal vertex (1 <= j < k) on the path that
/// replaces normalized edge `edge_index`, counted from the smaller endpoint.
Vertex subdivision_vertex(const Multigraph& g, int k, int edge_index, int j);

std::vector<int> bfs_distances(const Multigraph& g, Vertex source);

/// BFS visiting order from `source`.
std::vector<Vertex> bfs_order(const Multigraph& g, Vertex source);

} // namespace gonality
