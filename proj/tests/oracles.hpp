#pragma once

// Slow reference implementations used to cross-check the library. None of
// them call into burn, q_reduce, rank or the search.

#include "gonality/divisor.hpp"
#include "gonality/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using gonality::Chips;
using gonality::Divisor;
using gonality::Edge;
using gonality::Multigraph;
using gonality::Vertex;

/// Random connected multigraph: a random spanning tree plus `extra` random
/// non-loop edges (parallel edges allowed).
inline Multigraph random_graph(std::mt19937_64& rng, int n, int extra) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v});
    for (int i = 0; i < extra && n > 1; ++i) {
        auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n - 1));
        edges.push_back({u, v >= u ? v + 1 : v});
    }
    return Multigraph(n, std::move(edges));
}

inline Divisor random_effective(std::mt19937_64& rng, int n, Chips max_each) {
    Divisor d(n);
    for (Vertex v = 0; v < n; ++v)
        d[v] = static_cast<Chips>(rng() % static_cast<std::uint64_t>(max_each + 1));
    return d;
}

/// Edges from v to vertices outside `in` (a membership mask), by edge list.
inline int leaving(const Multigraph& g, Vertex v, const std::vector<char>& in) {
    int count = 0;
    for (auto e : g.edges()) {
        if (e.u == v && !in[static_cast<std::size_t>(e.v)])
            ++count;
        if (e.v == v && !in[static_cast<std::size_t>(e.u)])
            ++count;
    }
    return count;
}

inline bool valid_mask(const Multigraph& g, const Divisor& d, std::uint32_t mask) {
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        in[static_cast<std::size_t>(v)] = mask >> v & 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if ((mask >> v & 1) && d[v] < leaving(g, v, in))
            return false;
    return true;
}

/// Union of all valid subsets of V \ {q}; valid sets are closed under union,
/// so this is the maximal one.
inline std::uint32_t max_valid_subset(const Multigraph& g, const Divisor& d, Vertex q) {
    std::uint32_t best = 0;
    const std::uint32_t all = (1u << g.num_vertices()) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (!(mask >> q & 1) && valid_mask(g, d, mask))
            best |= mask;
    return best;
}

inline bool reduced_by_brute_force(const Multigraph& g, const Divisor& d, Vertex q) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (v != q && d[v] < 0)
            return false;
    return max_valid_subset(g, d, q) == 0;
}

/// Dhar burning with a random choice among the vertices ready to burn.
inline std::uint32_t random_order_unburned(const Multigraph& g, const Divisor& d, Vertex q, std::mt19937_64& rng) {
    const int n = g.num_vertices();
    std::vector<char> burned(static_cast<std::size_t>(n), 0);
    burned[static_cast<std::size_t>(q)] = 1;
    for (;;) {
        std::vector<Vertex> ready;
        for (Vertex v = 0; v < n; ++v) {
            if (burned[static_cast<std::size_t>(v)])
                continue;
            int hot = 0;
            for (auto e : g.edges()) {
                if (e.u == v && burned[static_cast<std::size_t>(e.v)])
                    ++hot;
                if (e.v == v && burned[static_cast<std::size_t>(e.u)])
                    ++hot;
            }
            if (hot > d[v])
                ready.push_back(v);
        }
        if (ready.empty())
            break;
        burned[static_cast<std::size_t>(ready[rng() % ready.size()])] = 1;
    }
    std::uint32_t unburned = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!burned[static_cast<std::size_t>(v)])
            unburned |= 1u << v;
    return unburned;
}

// ---------------------------------------------------------------- classes

using Wide = __int128;

/// Divisor classes through the reduced Laplacian L0 (vertex 0 removed):
/// D ~ F iff L0 x = (D - F) restricted has an integral solution, iff
/// adj(L0) (D - F)|_{1..} == 0 mod det(L0).
class ClassKey {
public:
    explicit ClassKey(const Multigraph& g) : n_(g.num_vertices()) {
        const int m = n_ - 1;
        std::vector<std::vector<Wide>> l0(static_cast<std::size_t>(m), std::vector<Wide>(static_cast<std::size_t>(m), 0));
        for (auto e : g.edges()) {
            auto add = [&](Vertex a, Vertex b, Wide w) {
                if (a > 0 && b > 0)
                    l0[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] += w;
            };
            add(e.u, e.u, 1);
            add(e.v, e.v, 1);
            add(e.u, e.v, -1);
            add(e.v, e.u, -1);
        }
        det_ = m == 0 ? 1 : determinant(l0);
        adj_.assign(static_cast<std::size_t>(m), std::vector<Wide>(static_cast<std::size_t>(m), 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                // adj[i][j] = (-1)^(i+j) det(L0 without row j, column i)
                std::vector<std::vector<Wide>> minor;
                for (int r = 0; r < m; ++r) {
                    if (r == j)
                        continue;
                    std::vector<Wide> row;
                    for (int c = 0; c < m; ++c)
                        if (c != i)
                            row.push_back(l0[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    minor.push_back(std::move(row));
                }
                Wide cof = minor.empty() ? 1 : determinant(minor);
                adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % 2 ? -cof : cof;
            }
    }

    Wide det() const { return det_; }

    std::vector<std::int64_t> key(const Divisor& d) const {
        const int m = n_ - 1;
        std::vector<std::int64_t> out;
        out.push_back(d.degree());
        for (int i = 0; i < m; ++i) {
            Wide s = 0;
            for (int j = 0; j < m; ++j)
                s += adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * d[j + 1];
            s %= det_;
            if (s < 0)
                s += det_;
            out.push_back(static_cast<std::int64_t>(s));
        }
        return out;
    }

    bool equivalent(const Divisor& a, const Divisor& b) const { return key(a) == key(b); }

private:
    // Bareiss fraction-free elimination
    static Wide determinant(std::vector<std::vector<Wide>> a) {
        const auto m = a.size();
        Wide sign = 1, prev = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (a[k][k] == 0) {
                std::size_t p = k + 1;
                while (p < m && a[p][k] == 0)
                    ++p;
                if (p == m)
                    return 0;
                std::swap(a[k], a[p]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < m; ++i)
                for (std::size_t j = k + 1; j < m; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        return sign * a[m - 1][m - 1];
    }

    int n_;
    Wide det_ = 1;
    std::vector<std::vector<Wide>> adj_;
};

template <typename Visit>
void for_each_effective(int n, Chips degree, Visit&& visit) {
    Divisor e(n);
    auto rec = [&](auto&& self, Vertex v, Chips left) -> void {
        if (v == n - 1) {
            e[v] = left;
            visit(static_cast<const Divisor&>(e));
            e[v] = 0;
            return;
        }
        for (Chips c = 0; c <= left; ++c) {
            e[v] = c;
            self(self, v + 1, left - c);
        }
        e[v] = 0;
    };
    if (degree >= 0)
        rec(rec, 0, degree);
}

/// Rank and gonality by definition: keys of all effective divisors of each
/// degree, and D - E tested against them for every effective E.
class BruteRank {
public:
    explicit BruteRank(const Multigraph& g) : g_(g), keys_(g) {}

    bool effective_class(const Divisor& d) {
        if (d.degree() < 0)
            return false;
        return classes(d.degree()).count(keys_.key(d)) > 0;
    }

    int rank(const Divisor& d) {
        if (!effective_class(d))
            return -1;
        int r = 0;
        while (r < d.degree() && at_least(d, r + 1))
            ++r;
        return r;
    }

    bool at_least(const Divisor& d, int r) {
        bool ok = true;
        for_each_effective(g_.num_vertices(), r, [&](const Divisor& e) {
            if (ok && !effective_class(d - e))
                ok = false;
        });
        return ok;
    }

    /// Smallest degree carrying an effective divisor of rank >= r.
    Chips gonality(int r = 1) {
        for (Chips d = r;; ++d) {
            bool found = false;
            for_each_effective(g_.num_vertices(), d, [&](const Divisor& div) {
                if (!found && at_least(div, r))
                    found = true;
            });
            if (found)
                return d;
        }
    }

private:
    const std::set<std::vector<std::int64_t>>& classes(Chips degree) {
        auto it = by_degree_.find(degree);
        if (it != by_degree_.end())
            return it->second;
        auto& s = by_degree_[degree];
        for_each_effective(g_.num_vertices(), degree, [&](const Divisor& e) { s.insert(keys_.key(e)); });
        return s;
    }

    const Multigraph& g_;
    ClassKey keys_;
    std::map<Chips, std::set<std::vector<std::int64_t>>> by_degree_;
};

/// D - L x by edge list.
inline Divisor apply_by_edges(const Multigraph& g, Divisor d, const std::vector<Chips>& x) {
    for (auto e : g.edges()) {
        Chips flow = x[static_cast<std::size_t>(e.u)] - x[static_cast<std::size_t>(e.v)];
        d[e.u] -= flow;
        d[e.v] += flow;
    }
    return d;
}

} // namespace oracle
