#include "gonality/dhar.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <limits>

namespace gonality {

namespace {

void require_vertex(const Multigraph& g, Vertex q) {
    if (q < 0 || q >= g.num_vertices())
        throw InvalidArgument("vertex " + std::to_string(q) + " is not in the graph");
}

void require_effective_off(const Divisor& d, Vertex q) {
    for (Vertex v = 0; v < d.size(); ++v)
        if (v != q && d[v] < 0)
            throw NegativeChips("vertex " + std::to_string(v) + " holds " + std::to_string(d[v]) +
                                " chips");
}

} // namespace

// ------------------------------------------------------------------- Burner

Burner::Burner(const Multigraph& g)
    : graph_(&g),
      burned_edges_(static_cast<std::size_t>(g.num_vertices()), 0),
      burned_(static_cast<std::size_t>(g.num_vertices()), 0) {
    stack_.reserve(static_cast<std::size_t>(g.num_vertices()));
}

int Burner::burn(std::span<const Chips> chips, Vertex q) {
    std::fill(burned_edges_.begin(), burned_edges_.end(), 0);
    std::fill(burned_.begin(), burned_.end(), 0);
    stack_.clear();
    burned_[static_cast<std::size_t>(q)] = 1;
    stack_.push_back(q);
    return spread(chips);
}

int Burner::burn_from(std::span<const Chips> chips, std::span<const char> sources) {
    std::fill(burned_edges_.begin(), burned_edges_.end(), 0);
    stack_.clear();
    for (std::size_t v = 0; v < burned_.size(); ++v) {
        burned_[v] = sources[v] ? 1 : 0;
        if (sources[v])
            stack_.push_back(static_cast<Vertex>(v));
    }
    return spread(chips);
}

int Burner::spread(std::span<const Chips> chips) {
    int burned_count = static_cast<int>(stack_.size());
    while (!stack_.empty()) {
        Vertex u = stack_.back();
        stack_.pop_back();
        for (auto nb : graph_->neighbors(u)) {
            auto w = static_cast<std::size_t>(nb.vertex);
            if (burned_[w])
                continue;
            burned_edges_[w] += nb.multiplicity;
            if (burned_edges_[w] > chips[w]) {
                burned_[w] = 1;
                ++burned_count;
                stack_.push_back(nb.vertex);
            }
        }
    }
    return graph_->num_vertices() - burned_count;
}

Chips Burner::max_firings(std::span<const Chips> chips) const {
    Chips best = std::numeric_limits<Chips>::max();
    for (Vertex v = 0; v < graph_->num_vertices(); ++v) {
        if (burned_[static_cast<std::size_t>(v)])
            continue;
        // burned_edges_ counts exactly the edges from v to the burned set
        Chips leaving = burned_edges_[static_cast<std::size_t>(v)];
        if (leaving > 0)
            best = std::min(best, chips[static_cast<std::size_t>(v)] / leaving);
    }
    return best;
}

void Burner::fire_unburned(std::span<Chips> chips, Chips times, std::vector<Chips>* script) const {
    for (Vertex v = 0; v < graph_->num_vertices(); ++v) {
        if (burned_[static_cast<std::size_t>(v)])
            continue;
        if (script)
            (*script)[static_cast<std::size_t>(v)] = checked_add((*script)[static_cast<std::size_t>(v)], times);
        for (auto nb : graph_->neighbors(v)) {
            if (!burned_[static_cast<std::size_t>(nb.vertex)])
                continue;
            Chips moved = checked_mul(times, nb.multiplicity);
            chips[static_cast<std::size_t>(v)] = checked_sub(chips[static_cast<std::size_t>(v)], moved);
            chips[static_cast<std::size_t>(nb.vertex)] =
                checked_add(chips[static_cast<std::size_t>(nb.vertex)], moved);
        }
    }
}

// -------------------------------------------------------------- operations

BurnResult burn(const Multigraph& g, const Divisor& d, Vertex q) {
    require_size(g, d);
    require_vertex(g, q);
    require_effective_off(d, q);

    const int n = g.num_vertices();
    std::vector<Chips> hits(static_cast<std::size_t>(n), 0);
    std::vector<char> burned(static_cast<std::size_t>(n), 0);
    BurnResult result;
    std::vector<Vertex> wave{q};
    burned[static_cast<std::size_t>(q)] = 1;
    result.burn_order.push_back({q, 0});
    for (int step = 1; !wave.empty(); ++step) {
        std::vector<Vertex> next;
        for (Vertex u : wave)
            for (auto nb : g.neighbors(u)) {
                auto w = static_cast<std::size_t>(nb.vertex);
                if (burned[w])
                    continue;
                hits[w] += nb.multiplicity;
                if (hits[w] > d[nb.vertex]) {
                    burned[w] = 1;
                    next.push_back(nb.vertex);
                    result.burn_order.push_back({nb.vertex, step});
                }
            }
        wave = std::move(next);
    }
    result.unburned = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
        if (!burned[static_cast<std::size_t>(v)])
            result.unburned.insert(v);
    return result;
}

bool is_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
    require_size(g, d);
    require_vertex(g, q);
    require_effective_off(d, q);
    Burner burner(g);
    return burner.burn(d.coeffs(), q) == 0;
}

Reduction q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
    require_size(g, d);
    require_vertex(g, q);
    const int n = g.num_vertices();
    std::vector<Chips> chips = d.vector();
    std::vector<Chips> script(static_cast<std::size_t>(n), 0);

    // Phase 1: clear deficits, farthest layer first. Firing the ball of
    // radius r-1 feeds layer r and leaves layers beyond r untouched.
    auto dist = bfs_distances(g, q);
    int radius = *std::max_element(dist.begin(), dist.end());
    for (int r = radius; r >= 1; --r) {
        Chips times = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] != r || chips[static_cast<std::size_t>(v)] >= 0)
                continue;
            Chips inward = 0;
            for (auto nb : g.neighbors(v))
                if (dist[static_cast<std::size_t>(nb.vertex)] == r - 1)
                    inward += nb.multiplicity;
            Chips deficit = -chips[static_cast<std::size_t>(v)];
            times = std::max(times, (deficit + inward - 1) / inward);
        }
        if (times == 0)
            continue;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] >= r)
                continue;
            script[static_cast<std::size_t>(v)] = checked_add(script[static_cast<std::size_t>(v)], times);
            for (auto nb : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(nb.vertex)] < r)
                    continue;
                Chips moved = checked_mul(times, nb.multiplicity);
                chips[static_cast<std::size_t>(v)] = checked_sub(chips[static_cast<std::size_t>(v)], moved);
                chips[static_cast<std::size_t>(nb.vertex)] =
                    checked_add(chips[static_cast<std::size_t>(nb.vertex)], moved);
            }
        }
    }

    // Phase 2: Dhar loop.
    Burner burner(g);
    while (burner.burn(chips, q) > 0)
        burner.fire_unburned(chips, burner.max_firings(chips), &script);

    FiringScript fs{std::move(script)};
    fs.normalize();
    return {Divisor(std::move(chips)), std::move(fs)};
}

bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
    require_size(g, a);
    require_size(g, b);
    if (a.degree() != b.degree())
        return false;
    return q_reduce(g, a, 0).reduced == q_reduce(g, b, 0).reduced;
}

} // namespace gonality
