#include "gonality/graph.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace gonality {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
    if (universe < 0)
        throw InvalidArgument("negative vertex set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::all(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

void VertexSet::check(Vertex v) const {
    if (v < 0 || v >= universe_)
        throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(universe_ - 1));
}

bool VertexSet::contains(Vertex v) const {
    if (v < 0 || v >= universe_)
        return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const {
    int count = 0;
    for (auto w : words_)
        count += std::popcount(w);
    return count;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe_);
    for (Vertex v = 0; v < universe_; ++v)
        if (!contains(v))
            out.insert(v);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (Vertex v = 0; v < universe_; ++v)
        if (contains(v) && !other.contains(v))
            return false;
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < universe_; ++v)
        if (contains(v))
            out.push_back(v);
    return out;
}

// --------------------------------------------------------------- Multigraph

Multigraph::Multigraph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 1)
        throw MalformedInput("a graph needs at least one vertex");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw MalformedInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") references a vertex outside 0.." + std::to_string(n - 1));
        if (e.u == e.v)
            throw LoopEdge("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());

    if (labels_.empty())
        labels_.resize(static_cast<std::size_t>(n));
    if (static_cast<int>(labels_.size()) != n)
        throw LengthMismatch("label count differs from vertex count");

    // adjacency with multiplicities, neighbours sorted
    std::vector<std::vector<Neighbor>> adj(static_cast<std::size_t>(n));
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < edges_.size();) {
        std::size_t j = i;
        while (j < edges_.size() && edges_[j] == edges_[i])
            ++j;
        int mult = static_cast<int>(j - i);
        auto [u, v] = edges_[i];
        adj[static_cast<std::size_t>(u)].push_back({v, mult});
        adj[static_cast<std::size_t>(v)].push_back({u, mult});
        degree_[static_cast<std::size_t>(u)] += mult;
        degree_[static_cast<std::size_t>(v)] += mult;
        i = j;
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        std::sort(adj[v].begin(), adj[v].end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
        offsets_[v + 1] = offsets_[v] + adj[v].size();
        adjacency_.insert(adjacency_.end(), adj[v].begin(), adj[v].end());
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (auto nb : neighbors(u))
            if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                ++reached;
                stack.push_back(nb.vertex);
            }
    }
    if (reached != n)
        throw Disconnected("graph has " + std::to_string(n - reached) +
                           " vertices unreachable from vertex 0");
}

std::span<const Neighbor> Multigraph::neighbors(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

int Multigraph::max_degree() const {
    return *std::max_element(degree_.begin(), degree_.end());
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    for (auto nb : neighbors(u))
        if (nb.vertex == v)
            return nb.multiplicity;
    return 0;
}

bool Multigraph::is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

std::vector<std::string_view> split_tags(std::string_view label) {
    std::vector<std::string_view> tags;
    while (!label.empty()) {
        auto bar = label.find('|');
        auto tag = label.substr(0, bar);
        if (!tag.empty())
            tags.push_back(tag);
        if (bar == std::string_view::npos)
            break;
        label.remove_prefix(bar + 1);
    }
    return tags;
}

bool Multigraph::has_tag(Vertex v, std::string_view tag) const {
    auto tags = split_tags(label(v));
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::optional<Vertex> Multigraph::find_tag(std::string_view tag) const {
    for (Vertex v = 0; v < n_; ++v)
        if (has_tag(v, tag))
            return v;
    return std::nullopt;
}

std::vector<Vertex> Multigraph::tagged_with_prefix(std::string_view prefix) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        for (auto tag : split_tags(label(v)))
            if (tag.starts_with(prefix)) {
                out.push_back(v);
                break;
            }
    return out;
}

Multigraph Multigraph::with_labels(std::vector<std::string> labels) const {
    return Multigraph(n_, edges_, std::move(labels));
}

// -------------------------------------------------------------- predicates

int cyclomatic_number(const Multigraph& g) {
    return g.num_edges() - g.num_vertices() + 1;
}

int edge_cut(const Multigraph& g, const VertexSet& a) {
    int cut = 0;
    for (auto e : g.edges())
        if (a.contains(e.u) != a.contains(e.v))
            ++cut;
    return cut;
}

bool is_strong_separator(const Multigraph& g, const VertexSet& s) {
    const int n = g.num_vertices();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int components = 0;
    for (Vertex start = 0; start < n; ++start) {
        if (s.contains(start) || component[static_cast<std::size_t>(start)] >= 0)
            continue;
        std::vector<Vertex> members{start};
        component[static_cast<std::size_t>(start)] = components;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto nb : g.neighbors(members[i]))
                if (!s.contains(nb.vertex) && component[static_cast<std::size_t>(nb.vertex)] < 0) {
                    component[static_cast<std::size_t>(nb.vertex)] = components;
                    members.push_back(nb.vertex);
                }

        // a connected multigraph is a tree iff it has |C| - 1 edges
        long inner = 0;
        std::vector<int> to_separator(static_cast<std::size_t>(n), 0);
        for (Vertex u : members)
            for (auto nb : g.neighbors(u)) {
                if (s.contains(nb.vertex))
                    to_separator[static_cast<std::size_t>(nb.vertex)] += nb.multiplicity;
                else
                    inner += nb.multiplicity;
            }
        if (inner / 2 != static_cast<long>(members.size()) - 1)
            return false;
        if (std::any_of(to_separator.begin(), to_separator.end(), [](int c) { return c > 1; }))
            return false;
        ++components;
    }
    return true;
}

// ------------------------------------------------------------- subdivision

Multigraph subdivide_edges(const Multigraph& g, std::span<const int> parts) {
    if (static_cast<int>(parts.size()) != g.num_edges())
        throw LengthMismatch("got " + std::to_string(parts.size()) + " part counts for " +
                             std::to_string(g.num_edges()) + " edges");
    int next = g.num_vertices();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw InvalidArgument("edge part counts must be positive");
        auto [u, v] = g.edges()[i];
        Vertex prev = u;
        for (int j = 1; j < parts[i]; ++j) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, v});
    }
    auto labels = g.labels();
    labels.resize(static_cast<std::size_t>(next));
    return Multigraph(next, std::move(edges), std::move(labels));
}

Multigraph subdivide_uniform(const Multigraph& g, int k) {
    if (k < 1)
        throw InvalidArgument("subdivision factor must be at least 1");
    std::vector<int> parts(static_cast<std::size_t>(g.num_edges()), k);
    return subdivide_edges(g, parts);
}

Vertex subdivision_vertex(const Multigraph& g, int k, int edge_index, int j) {
    if (edge_index < 0 || edge_index >= g.num_edges() || j < 1 || j >= k)
        throw InvalidArgument("no such subdivision vertex");
    return g.num_vertices() + edge_index * (k - 1) + (j - 1);
}

std::vector<int> bfs_distances(const Multigraph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (auto nb : g.neighbors(u))
            if (dist[static_cast<std::size_t>(nb.vertex)] < 0) {
                dist[static_cast<std::size_t>(nb.vertex)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(nb.vertex);
            }
    }
    return dist;
}

std::vector<Vertex> bfs_order(const Multigraph& g, Vertex source) {
    auto dist = bfs_distances(g, source);
    std::vector<Vertex> order(dist.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
    });
    return order;
}

} // namespace gonality
