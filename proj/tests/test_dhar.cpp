#include "gonality/dhar.hpp"
#include "gonality/error.hpp"
#include "gonality/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gonality;

namespace {

std::uint32_t mask_of(const VertexSet& s) {
    std::uint32_t m = 0;
    for (Vertex v : s.members())
        m |= 1u << v;
    return m;
}

} // namespace

TEST_CASE("burn examples") {
    auto tri = complete_graph(3);
    CHECK(burn(tri, Divisor{0, 1, 0}, 0).unburned.empty());
    auto c4 = cycle_graph(4);
    CHECK(burn(c4, Divisor{0, 0, 2, 0}, 0).unburned == VertexSet(4, {2}));
    auto t = minimal_tricycle();
    Divisor rich(t.num_vertices());
    for (Vertex v = 0; v < t.num_vertices(); ++v)
        rich[v] = t.degree(v);
    auto all_but = VertexSet::all(t.num_vertices());
    all_but.erase(6);
    CHECK(burn(t, rich, 6).unburned == all_but);
}

TEST_CASE("burn trace and errors") {
    auto p = path_graph(3);
    auto b = burn(p, Divisor{0, 0, 0}, 0);
    REQUIRE(b.burn_order.size() == 3);
    CHECK(b.burn_order[0].vertex == 0);
    CHECK(b.burn_order[0].step == 0);
    CHECK(b.burn_order[2].step == 2);
    CHECK_THROWS_AS(burn(p, Divisor{0, -1, 0}, 0), NegativeChips);
    CHECK_NOTHROW(burn(p, Divisor{-5, 0, 0}, 0));
    CHECK_THROWS_AS(burn(p, Divisor{0, 0, 0}, 3), InvalidArgument);
}

TEST_CASE("burn matches the brute-force maximal valid subset") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 9));
        auto d = oracle::random_effective(rng, g.num_vertices(), 3);
        auto q = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
        CHECK(mask_of(burn(g, d, q).unburned) == oracle::max_valid_subset(g, d, q));
    }
}

TEST_CASE("burn is order independent") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 9));
        auto d = oracle::random_effective(rng, g.num_vertices(), 3);
        auto q = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
        auto expected = mask_of(burn(g, d, q).unburned);
        for (int shuffle = 0; shuffle < 5; ++shuffle)
            CHECK(oracle::random_order_unburned(g, d, q, rng) == expected);
    }
}

TEST_CASE("Burner matches burn") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 9));
        auto d = oracle::random_effective(rng, g.num_vertices(), 3);
        auto q = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
        Burner burner(g);
        auto expected = burn(g, d, q).unburned;
        CHECK(burner.burn(d.vector(), q) == expected.size());
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(burner.is_unburned(v) == expected.contains(v));
    }
}

TEST_CASE("is_reduced") {
    auto c4 = cycle_graph(4);
    CHECK(is_reduced(c4, Divisor{5, 0, 0, 0}, 0));
    CHECK_FALSE(is_reduced(c4, Divisor{0, 2, 0, 0}, 0));
    CHECK_FALSE(is_reduced(c4, Divisor{0, 0, 2, 0}, 0));
}

TEST_CASE("q_reduce examples") {
    auto c4 = cycle_graph(4);
    auto r = q_reduce(c4, Divisor{0, 0, 2, 0}, 0);
    CHECK(r.reduced == Divisor{2, 0, 0, 0});
    CHECK(apply_script(c4, Divisor{0, 0, 2, 0}, r.script) == r.reduced);
    auto fixed = q_reduce(c4, Divisor{1, 1, 0, 0}, 0);
    CHECK(fixed.reduced == Divisor{1, 1, 0, 0});
    CHECK(fixed.script.is_zero());
    CHECK_THROWS_AS(q_reduce(c4, Divisor{1, 1, 0, 0}, 9), InvalidArgument);
}

TEST_CASE("q_reduce properties on random divisors") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 9));
        const int n = g.num_vertices();
        Divisor d(n);
        for (Vertex v = 0; v < n; ++v)
            d[v] = static_cast<Chips>(rng() % 9) - 4;
        auto q = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        auto [reduced, script] = q_reduce(g, d, q);
        CHECK(reduced.degree() == d.degree());
        CHECK(apply_script(g, d, script) == reduced);
        CHECK(oracle::reduced_by_brute_force(g, reduced, q));
        CHECK(is_reduced(g, reduced, q));
        CHECK(q_reduce(g, reduced, q).reduced == reduced);
        CHECK(q_reduce(g, reduced, q).script.is_zero());
    }
}

TEST_CASE("equivalent") {
    Multigraph doubled(2, {{0, 1}, {0, 1}});
    CHECK_FALSE(equivalent(doubled, Divisor{1, 0}, Divisor{0, 1}));
    CHECK(equivalent(doubled, Divisor{2, 0}, Divisor{0, 2}));
    CHECK_FALSE(equivalent(doubled, Divisor{1, 0}, Divisor{2, 0}));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 9));
        auto d = oracle::random_effective(rng, g.num_vertices(), 3);
        std::vector<Chips> x(static_cast<std::size_t>(g.num_vertices()));
        for (auto& xi : x)
            xi = static_cast<Chips>(rng() % 9) - 4;
        CHECK(equivalent(g, d, apply_script(g, d, FiringScript{x})));
    }
}

TEST_CASE("reduction scripts replay through valid level sets") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 9));
        auto d = oracle::random_effective(rng, g.num_vertices(), 3);
        auto q = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
        auto [reduced, script] = q_reduce(g, d, q);
        Divisor cur = d;
        for (const auto& u : level_sets(script)) {
            REQUIRE(is_valid_set(g, cur, u));
            cur = fire_set(g, cur, u);
        }
        CHECK(cur == reduced);
    }
}
