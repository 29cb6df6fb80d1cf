#include "gonality/rank.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gonality {

namespace {

Vertex hub(const Multigraph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

std::vector<Vertex> by_decreasing_degree(const Multigraph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

class RankSolver {
public:
    explicit RankSolver(const Multigraph& g)
        : g_(g), order_(by_decreasing_degree(g)), checker_(g) {}

    bool at_least(const Divisor& d, int r) {
        Divisor reduced = q_reduce(g_, d, 0).reduced;
        if (reduced[0] < 0)
            return false;
        if (r == 0)
            return true;
        if (r == 1)
            return checker_.check(reduced.coeffs());
        auto key = std::make_pair(r, reduced.vector());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool ok = true;
        for (Vertex v : order_) {
            Divisor less = reduced;
            less[v] = checked_sub(less[v], 1);
            if (!at_least(less, r - 1)) {
                ok = false;
                break;
            }
        }
        memo_.emplace(std::move(key), ok);
        return ok;
    }

private:
    const Multigraph& g_;
    std::vector<Vertex> order_;
    PositiveRankChecker checker_;
    std::map<std::pair<int, std::vector<Chips>>, bool> memo_;
};

// Calls visit(E) for every effective divisor of degree r on n vertices.
template <typename Visit>
bool for_each_effective(int n, int r, Visit&& visit) {
    Divisor e(n);
    auto rec = [&](auto&& self, Vertex v, int left) -> bool {
        if (v == n - 1) {
            e[v] = left;
            bool go_on = visit(e);
            e[v] = 0;
            return go_on;
        }
        for (int c = left; c >= 0; --c) {
            e[v] = c;
            if (!self(self, v + 1, left - c)) {
                e[v] = 0;
                return false;
            }
        }
        e[v] = 0;
        return true;
    };
    return rec(rec, 0, r);
}

} // namespace

bool RankCertificate::replays(const Multigraph& g, const Divisor& d) const {
    for (const auto& entry : entries) {
        if (!entry.witness.is_effective() || !entry.witness.dominates(entry.target))
            return false;
        if (apply_script(g, d, entry.script) != entry.witness)
            return false;
    }
    return true;
}

// -------------------------------------------------------- PositiveRankChecker

PositiveRankChecker::PositiveRankChecker(const Multigraph& g, std::vector<Vertex> targets)
    : graph_(&g), burner_(g), work_(static_cast<std::size_t>(g.num_vertices())) {
    std::vector<char> wanted(static_cast<std::size_t>(g.num_vertices()), targets.empty() ? 1 : 0);
    for (Vertex t : targets)
        wanted.at(static_cast<std::size_t>(t)) = 1;
    for (Vertex v : bfs_order(g, hub(g)))
        if (wanted[static_cast<std::size_t>(v)])
            order_.push_back(v);
}

bool PositiveRankChecker::check(std::span<const Chips> chips) {
    std::copy(chips.begin(), chips.end(), work_.begin());
    for (Vertex v : order_) {
        while (work_[static_cast<std::size_t>(v)] == 0) {
            if (burner_.burn(work_, v) == 0)
                return false;
            burner_.fire_unburned(work_);
        }
    }
    return true;
}

// --------------------------------------------------------------- operations

bool reaches(const Multigraph& g, const Divisor& d, Vertex v) {
    require_size(g, d);
    return q_reduce(g, d, v).reduced[v] >= 1;
}

bool has_positive_rank(const Multigraph& g, const Divisor& d) {
    require_size(g, d);
    Vertex base = hub(g);
    Divisor reduced = q_reduce(g, d, base).reduced;
    if (reduced[base] < 1)
        return false;
    PositiveRankChecker checker(g);
    return checker.check(reduced.coeffs());
}

RankCertificate positive_rank_certificate(const Multigraph& g, const Divisor& d) {
    require_size(g, d);
    const int n = g.num_vertices();
    Vertex base = hub(g);
    auto [reduced, script] = q_reduce(g, d, base);
    RankCertificate cert;
    if (reduced[base] < 1) {
        cert.uncovered = Divisor::unit(n, base);
        return cert;
    }
    std::vector<Chips> chips = reduced.vector();
    std::vector<Chips> times = script.times;
    Burner burner(g);
    for (Vertex v : bfs_order(g, base)) {
        while (chips[static_cast<std::size_t>(v)] == 0) {
            if (burner.burn(chips, v) == 0) {
                cert.uncovered = Divisor::unit(n, v);
                return cert;
            }
            burner.fire_unburned(chips, 1, &times);
        }
        FiringScript fs{times};
        fs.normalize();
        cert.entries.push_back({Divisor::unit(n, v), Divisor(chips), std::move(fs)});
    }
    std::sort(cert.entries.begin(), cert.entries.end(),
              [](const CertificateEntry& a, const CertificateEntry& b) { return a.target > b.target; });
    return cert;
}

bool rank_at_least(const Multigraph& g, const Divisor& d, int r) {
    require_size(g, d);
    if (r < 0)
        return true;
    RankSolver solver(g);
    return solver.at_least(d, r);
}

int rank(const Multigraph& g, const Divisor& d) {
    require_size(g, d);
    RankSolver solver(g);
    if (!solver.at_least(d, 0))
        return -1;
    int r = 0;
    const Chips degree = d.degree();
    while (r < degree && solver.at_least(d, r + 1))
        ++r;
    return r;
}

std::optional<CertificateEntry> find_dominating(const Multigraph& g, const Divisor& d,
                                                const Divisor& target) {
    require_size(g, d);
    require_size(g, target);
    auto [reduced, script] = q_reduce(g, d - target, 0);
    if (reduced[0] < 0)
        return std::nullopt;
    return CertificateEntry{target, reduced + target, std::move(script)};
}

RankCertificate rank_certificate(const Multigraph& g, const Divisor& d, int r, std::size_t limit) {
    require_size(g, d);
    RankCertificate cert;
    if (r < 0)
        return cert;
    for_each_effective(g.num_vertices(), r, [&](const Divisor& e) {
        auto entry = find_dominating(g, d, e);
        if (!entry) {
            cert.uncovered = e;
            return false;
        }
        cert.entries.push_back(std::move(*entry));
        return cert.entries.size() < limit;
    });
    return cert;
}

bool positive_rank_via_separator(const Multigraph& g, const Divisor& d, const VertexSet& s) {
    require_size(g, d);
    if (s.universe() != g.num_vertices() || !is_strong_separator(g, s))
        throw NotStrongSeparator("vertex set is not a strong separator");
    auto members = s.members();
    if (members.empty())
        return has_positive_rank(g, d); // G itself is then a tree
    Divisor reduced = q_reduce(g, d, members.front()).reduced;
    if (reduced[members.front()] < 1)
        return false;
    PositiveRankChecker checker(g, members);
    return checker.check(reduced.coeffs());
}

std::optional<VertexSet> labelled_separator(const Multigraph& g) {
    VertexSet s(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (auto tag : split_tags(g.label(v)))
            if (tag.find("transition") != std::string_view::npos) {
                s.insert(v);
                break;
            }
    if (s.empty() || !is_strong_separator(g, s))
        return std::nullopt;
    return s;
}

} // namespace gonality
