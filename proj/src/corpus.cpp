#include "gonality/corpus.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace gonality {

namespace {

constexpr int max_vertices = 10;

using Adjacency = std::array<std::uint16_t, max_vertices>;

Adjacency unpack(int n, std::uint64_t code) {
    Adjacency adj{};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> pair_bit(n, i, j) & 1) {
                adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                adj[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
            }
    return adj;
}

// Equitable colouring by iterated neighbour-colour counts; the colours are
// ranks of isomorphism-invariant signatures, so cell order is canonical.
std::vector<int> refine(int n, const Adjacency& adj) {
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    int classes = 1;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.assign(static_cast<std::size_t>(classes) + 1, 0);
            s[0] = colour[static_cast<std::size_t>(v)];
            for (int u = 0; u < n; ++u)
                if (adj[static_cast<std::size_t>(v)] >> u & 1)
                    ++s[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)]) + 1];
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig)
            rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank)
            r = next++;
        for (int v = 0; v < n; ++v)
            colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        if (next == classes)
            return colour;
        classes = next;
    }
}

} // namespace

int pair_bit(int n, int i, int j) {
    // column order as in graph6: (0,1), (0,2), (1,2), (0,3), ...; the first
    // pair is the most significant bit
    int index = j * (j - 1) / 2 + i;
    return n * (n - 1) / 2 - 1 - index;
}

std::uint64_t canonical_code(int n, std::uint64_t code) {
    if (n < 1 || n > max_vertices)
        throw InvalidArgument("canonical form supports 1..10 vertices");
    const Adjacency adj = unpack(n, code);
    const auto colour = refine(n, adj);

    std::vector<Vertex> slots(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        slots[static_cast<std::size_t>(v)] = v;
    std::stable_sort(slots.begin(), slots.end(), [&](Vertex a, Vertex b) {
        return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
    });

    // perm[p] is the vertex placed at position p; positions take cells in
    // colour order. Placing position p appends the pairs (i, p), i < p, which
    // is exactly the next stretch of a column-order code, so a prefix larger
    // than the best code's prefix can be abandoned.
    const int total_bits = n * (n - 1) / 2;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::uint64_t best = 0;
    bool found = false;
    auto rec = [&](auto&& self, int pos, std::uint64_t prefix, int bits) -> void {
        if (found && prefix > (best >> (total_bits - bits)))
            return;
        if (pos == n) {
            if (!found || prefix < best)
                best = prefix;
            found = true;
            return;
        }
        int cell = colour[static_cast<std::size_t>(slots[static_cast<std::size_t>(pos)])];
        for (Vertex v : slots) {
            if (used[static_cast<std::size_t>(v)] || colour[static_cast<std::size_t>(v)] != cell)
                continue;
            used[static_cast<std::size_t>(v)] = 1;
            perm[static_cast<std::size_t>(pos)] = v;
            std::uint64_t next = prefix;
            for (int i = 0; i < pos; ++i)
                next = next << 1 | (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> v & 1);
            self(self, pos + 1, next, bits + pos);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

std::vector<std::uint64_t> simple_graph_classes(int n) {
    if (n < 1 || n > max_vertices)
        throw InvalidArgument("graph classes supported for 1..10 vertices");
    std::set<std::uint64_t> current{0};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> grown;
        for (std::uint64_t code : current) {
            const Adjacency adj = unpack(m - 1, code);
            for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                std::uint64_t bigger = 0;
                for (int i = 0; i < m - 1; ++i) {
                    for (int j = i + 1; j < m - 1; ++j)
                        if (adj[static_cast<std::size_t>(i)] >> j & 1)
                            bigger |= std::uint64_t{1} << pair_bit(m, i, j);
                    if (nb >> i & 1)
                        bigger |= std::uint64_t{1} << pair_bit(m, i, m - 1);
                }
                grown.insert(canonical_code(m, bigger));
            }
        }
        current = std::move(grown);
    }
    return {current.begin(), current.end()};
}

Multigraph graph_from_code(int n, std::uint64_t code) {
    if (n < 1 || n > max_vertices)
        throw InvalidArgument("graph codes supported for 1..10 vertices");
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_bit(n, i, j) & 1)
                edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

std::vector<Multigraph> connected_graphs(int n) {
    std::vector<Multigraph> out;
    for (std::uint64_t code : simple_graph_classes(n)) {
        const Adjacency adj = unpack(n, code);
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1)
                    next |= adj[static_cast<std::size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == (1u << n) - 1)
            out.push_back(graph_from_code(n, code));
    }
    return out;
}

} // namespace gonality
