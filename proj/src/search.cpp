#include "gonality/search.hpp"

#include "gonality/dhar.hpp"
#include "gonality/error.hpp"
#include "gonality/formats.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

namespace gonality {

namespace {

/// Backtracking over chip counts on V \ {q}, highest degree first. After
/// each assignment the fire starts at q and every unassigned vertex; any
/// unburned vertex means the assigned part already holds a valid set
/// avoiding q, which no completion can destroy.
class ReducedEnumerator {
public:
    ReducedEnumerator(const Multigraph& g, Vertex q)
        : g_(g), q_(q), burner_(g),
          chips_(static_cast<std::size_t>(g.num_vertices()), 0),
          sources_(static_cast<std::size_t>(g.num_vertices()), 1) {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (v != q)
                order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    /// Largest admissible count on the first branching vertex.
    Chips first_choices(Chips budget) const {
        if (order_.empty())
            return 0;
        return std::min<Chips>(g_.degree(order_.front()) - 1, budget);
    }

    /// Enumerates degree-d reduced divisors with at least `min_on_q` chips on
    /// q. With `first` set, only that count is tried on the first vertex.
    /// `visit` returns false to stop; `cancelled` is polled at every node.
    template <typename Visit, typename Cancelled>
    void run(Chips d, Chips min_on_q, std::optional<Chips> first, DegreeStats& stats, Visit&& visit,
             Cancelled&& cancelled) {
        std::fill(chips_.begin(), chips_.end(), 0);
        std::fill(sources_.begin(), sources_.end(), 1);
        d_ = d;
        stopped_ = false;
        budget_ = d - min_on_q;
        if (budget_ < 0)
            return;
        descend(0, budget_, first, stats, visit, cancelled);
    }

private:
    template <typename Visit, typename Cancelled>
    void descend(std::size_t pos, Chips left, std::optional<Chips> first, DegreeStats& stats, Visit& visit,
                 Cancelled& cancelled) {
        if (stopped_ || cancelled()) {
            stopped_ = true;
            return;
        }
        if (pos == order_.size()) {
            // everything not placed off q sits on q
            chips_[static_cast<std::size_t>(q_)] = d_ - (budget_ - left);
            ++stats.candidates;
            if (!visit(std::span<const Chips>(chips_)))
                stopped_ = true;
            chips_[static_cast<std::size_t>(q_)] = 0;
            return;
        }
        Vertex v = order_[pos];
        auto vi = static_cast<std::size_t>(v);
        Chips low = 0, high = std::min<Chips>(g_.degree(v) - 1, left);
        if (pos == 0 && first) {
            if (*first > high)
                return;
            low = high = *first;
        }
        sources_[vi] = 0;
        for (Chips c = low; c <= high && !stopped_; ++c) {
            chips_[vi] = c;
            if (burner_.burn_from(chips_, sources_) > 0) {
                ++stats.pruned;
                continue;
            }
            descend(pos + 1, left - c, std::nullopt, stats, visit, cancelled);
        }
        chips_[vi] = 0;
        sources_[vi] = 1;
    }

    const Multigraph& g_;
    Vertex q_;
    std::vector<Vertex> order_;
    Burner burner_;
    std::vector<Chips> chips_;
    std::vector<char> sources_;
    Chips d_ = 0;
    Chips budget_ = 0;
    bool stopped_ = false;
};

/// Rank test for one worker.
class RankTest {
public:
    RankTest(const Multigraph& g, int r, const std::vector<Vertex>& targets)
        : g_(g), r_(r), checker_(g, targets) {}

    bool operator()(std::span<const Chips> chips) {
        if (r_ == 1)
            return checker_.check(chips);
        return rank_at_least(g_, Divisor(std::vector<Chips>(chips.begin(), chips.end())), r_);
    }

private:
    const Multigraph& g_;
    int r_;
    PositiveRankChecker checker_;
};

struct Partition {
    DegreeStats stats;
    std::optional<std::vector<Chips>> witness;
    bool cut_short = false;
};

} // namespace

Vertex default_base_vertex(const Multigraph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

void enumerate_q_reduced(const Multigraph& g, Vertex q, Chips d,
                         const std::function<bool(const Divisor&)>& visit) {
    if (q < 0 || q >= g.num_vertices())
        throw InvalidArgument("base vertex outside the graph");
    if (d < 0)
        throw InvalidArgument("degree must be nonnegative");
    ReducedEnumerator enumerator(g, q);
    DegreeStats stats;
    enumerator.run(
        d, 0, std::nullopt, stats,
        [&](std::span<const Chips> chips) {
            return visit(Divisor(std::vector<Chips>(chips.begin(), chips.end())));
        },
        [] { return false; });
}

std::vector<Divisor> q_reduced_divisors(const Multigraph& g, Vertex q, Chips d) {
    std::vector<Divisor> out;
    enumerate_q_reduced(g, q, d, [&](const Divisor& div) {
        out.push_back(div);
        return true;
    });
    return out;
}

GonalityReport dgon_r(const Multigraph& g, int r, const SearchOptions& options) {
    if (r < 1)
        throw InvalidArgument("r must be at least 1");
    if (options.jobs < 1)
        throw InvalidArgument("jobs must be at least 1");
    auto start = std::chrono::steady_clock::now();

    GonalityReport report;
    report.graph_id = encode(g, Format::Sparse6);
    report.r = r;
    report.base = options.base.value_or(default_base_vertex(g));
    if (report.base < 0 || report.base >= g.num_vertices())
        throw InvalidArgument("base vertex outside the graph");

    std::vector<Vertex> targets;
    if (options.use_separator && r == 1)
        if (auto sep = labelled_separator(g)) {
            targets = sep->members();
            report.used_separator = true;
        }

    // r chips on every vertex always has rank >= r
    const Chips cap = static_cast<Chips>(r) + cyclomatic_number(g) + static_cast<Chips>(r) * g.num_vertices();
    const int jobs = options.jobs;

    for (Chips d = r;; ++d) {
        if (d > cap)
            throw InternalBound("no rank-" + std::to_string(r) + " divisor up to degree " + std::to_string(cap));

        ReducedEnumerator probe(g, report.base);
        const Chips partitions = probe.first_choices(d - r) + 1;
        std::vector<Partition> parts(static_cast<std::size_t>(partitions));
        std::atomic<Chips> next{0};
        std::atomic<Chips> best{LLONG_MAX};

        auto worker = [&] {
            ReducedEnumerator enumerator(g, report.base);
            RankTest test(g, r, targets);
            for (Chips p = next++; p < partitions; p = next++) {
                auto& part = parts[static_cast<std::size_t>(p)];
                part.stats.degree = d;
                if (p > best.load()) {
                    part.cut_short = true;
                    continue;
                }
                enumerator.run(
                    d, r, p, part.stats,
                    [&](std::span<const Chips> chips) {
                        if (!test(chips))
                            return true;
                        part.witness.emplace(chips.begin(), chips.end());
                        Chips seen = best.load();
                        while (p < seen && !best.compare_exchange_weak(seen, p)) {
                        }
                        return false;
                    },
                    [&] {
                        if (best.load() < p) {
                            part.cut_short = true;
                            return true;
                        }
                        return false;
                    });
            }
        };
        if (jobs == 1 || partitions == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < std::min<Chips>(jobs, partitions); ++j)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }

        DegreeStats total;
        total.degree = d;
        for (const auto& part : parts) {
            total.candidates += part.stats.candidates;
            total.pruned += part.stats.pruned;
        }
        Chips winner = best.load();
        total.exhaustive = winner == LLONG_MAX;
        report.degrees.push_back(total);
        report.candidates += total.candidates;
        report.pruned += total.pruned;

        if (winner != LLONG_MAX) {
            report.value = d;
            report.witness = Divisor(*parts[static_cast<std::size_t>(winner)].witness);
            report.truncated = true;
            if (options.certificate)
                report.certificate = positive_rank_certificate(g, report.witness);
            break;
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

GonalityReport dgon(const Multigraph& g, const SearchOptions& options) {
    return dgon_r(g, 1, options);
}

BrillNoetherCheck check_bn(const Multigraph& g, Chips known_dgon) {
    BrillNoetherCheck out;
    out.genus = cyclomatic_number(g);
    out.bound = (out.genus + 3) / 2;
    out.dgon = known_dgon;
    out.satisfied = known_dgon <= out.bound;
    return out;
}

BrillNoetherCheck check_bn(const Multigraph& g, const SearchOptions& options) {
    SearchOptions opts = options;
    opts.certificate = false;
    return check_bn(g, dgon(g, opts).value);
}

SweepResult subdivision_sweep(const Multigraph& g, int kmax, int r, const SearchOptions& options) {
    if (kmax < 1)
        throw InvalidArgument("kmax must be at least 1");
    SweepResult result;
    result.r = r;
    result.kmax = kmax;
    SearchOptions opts = options;
    opts.certificate = false;
    opts.base.reset();
    for (int k = 1; k <= kmax; ++k) {
        auto value = dgon_r(subdivide_uniform(g, k), r, opts).value;
        result.entries.push_back({k, value});
        result.minimum = k == 1 ? value : std::min(result.minimum, value);
    }
    return result;
}

} // namespace gonality
