#include "gonality/dhar.hpp"
#include "gonality/divisor.hpp"
#include "gonality/error.hpp"
#include "gonality/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <limits>

using namespace gonality;

TEST_CASE("divisor basics") {
    Divisor d{2, 0, -1};
    CHECK(d.degree() == 1);
    CHECK_FALSE(d.is_effective());
    CHECK(d.support() == std::vector<Vertex>{0, 2});
    CHECK(Divisor{2, 1, 0}.dominates(Divisor{1, 1, 0}));
    CHECK(Divisor::unit(3, 1, 4) == Divisor{0, 4, 0});
    CHECK_THROWS_AS((Divisor{1, 2} + Divisor{1}), LengthMismatch);
}

TEST_CASE("checked arithmetic") {
    const Chips big = std::numeric_limits<Chips>::max();
    CHECK_THROWS_AS(checked_add(big, 1), ChipOverflow);
    CHECK_THROWS_AS(checked_sub(-big, 2), ChipOverflow);
    CHECK_THROWS_AS(checked_mul(big, 2), ChipOverflow);
    Divisor d{big};
    CHECK_THROWS_AS(d += Divisor{1}, ChipOverflow);
}

TEST_CASE("laplacian") {
    auto p = path_graph(2);
    std::vector<Chips> ones{1, 1}, zero{0, 0}, first{1, 0};
    CHECK(laplacian_apply(p, ones) == Divisor{0, 0});
    CHECK(laplacian_apply(p, zero) == Divisor{0, 0});
    CHECK(laplacian_apply(p, first) == Divisor{1, -1});
    CHECK(apply_script(p, Divisor{1, 0}, FiringScript{first}) == Divisor{0, 1});
}

TEST_CASE("laplacian agrees with the edge-list oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 10));
        std::vector<Chips> x(static_cast<std::size_t>(g.num_vertices()));
        for (auto& xi : x)
            xi = static_cast<Chips>(rng() % 7) - 3;
        Divisor d = oracle::random_effective(rng, g.num_vertices(), 4);
        auto lx = laplacian_apply(g, x);
        CHECK(lx.degree() == 0);
        CHECK(apply_script(g, d, FiringScript{x}) == oracle::apply_by_edges(g, d, x));
    }
}

TEST_CASE("valid sets") {
    auto c4 = cycle_graph(4);
    CHECK(is_valid_set(c4, Divisor{2, 0, 0, 0}, VertexSet(4, {0})));
    CHECK_FALSE(is_valid_set(c4, Divisor{1, 0, 0, 0}, VertexSet(4, {0})));
    CHECK(is_valid_set(c4, Divisor{0, 0, 0, 0}, VertexSet::all(4)));
    CHECK_THROWS_AS(is_valid_set(c4, Divisor{-1, 1, 0, 0}, VertexSet(4, {1})), NotEffective);
}

TEST_CASE("fire_set") {
    auto c4 = cycle_graph(4);
    Divisor d{2, 0, 0, 0};
    CHECK(fire_set(c4, d, VertexSet(4, {0})) == Divisor{0, 1, 0, 1});
    CHECK(fire_set(c4, d, VertexSet::all(4)) == d);
    CHECK_THROWS_AS(fire_set(c4, Divisor{1, 0, 0, 0}, VertexSet(4, {0})), InvalidFiring);
    VertexSet a(4, {1, 2});
    CHECK(fire_set_unchecked(c4, fire_set_unchecked(c4, d, a), a.complement()) == d);
}

TEST_CASE("firing preserves degree and effectiveness") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 10));
        Divisor d = oracle::random_effective(rng, g.num_vertices(), 4);
        VertexSet a(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (rng() & 1)
                a.insert(v);
        auto fired = fire_set_unchecked(g, d, a);
        CHECK(fired.degree() == d.degree());
        if (is_valid_set(g, d, a)) {
            CHECK(fire_set(g, d, a).is_effective());
        }
    }
}

TEST_CASE("firing_script") {
    auto tri = complete_graph(3);
    Divisor d{3, 1, 0};
    CHECK(firing_script(tri, d, d).is_zero());
    VertexSet a(3, {0});
    CHECK(firing_script(tri, d, fire_set(tri, d, a)) == FiringScript{{1, 0, 0}});
    Multigraph doubled(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(firing_script(doubled, Divisor{1, 0}, Divisor{0, 1}), NotEquivalent);
    CHECK_THROWS_AS(firing_script(doubled, Divisor{1, 0}, Divisor{0, 2}), DegreeMismatch);
}

TEST_CASE("firing_script recovers random scripts") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 10));
        const int n = g.num_vertices();
        FiringScript x{std::vector<Chips>(static_cast<std::size_t>(n))};
        for (auto& xi : x.times)
            xi = static_cast<Chips>(rng() % 6);
        x.normalize();
        Divisor d = oracle::random_effective(rng, n, 3);
        auto recovered = firing_script(g, d, apply_script(g, d, x));
        CHECK(recovered == x);
    }
}

TEST_CASE("doubled edge classes: firing_script, equivalence and the class oracle agree") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 6));
        oracle::ClassKey keys(g);
        const int n = g.num_vertices();
        Divisor a = oracle::random_effective(rng, n, 2), b = oracle::random_effective(rng, n, 2);
        if (a.degree() != b.degree())
            continue;
        bool same = keys.equivalent(a, b);
        CHECK(equivalent(g, a, b) == same);
        if (same)
            CHECK(apply_script(g, a, firing_script(g, a, b)) == b);
        else
            CHECK_THROWS_AS(firing_script(g, a, b), NotEquivalent);
    }
}

TEST_CASE("level sets") {
    CHECK(level_sets(FiringScript::zero(3)).empty());
    CHECK(level_sets(FiringScript{{0, 1, 1, 0}}) == std::vector<VertexSet>{VertexSet(4, {1, 2})});
    auto tri = complete_graph(3);
    FiringScript x{{2, 1, 0}};
    auto sets = level_sets(x);
    CHECK(sets == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {0, 1})});
    Divisor d{4, 1, 0};
    Divisor replay = d;
    for (const auto& u : sets)
        replay = fire_set(tri, replay, u);
    CHECK(replay == apply_script(tri, d, x));
    // unnormalized input is shifted first
    CHECK(level_sets(FiringScript{{3, 2, 1}}) == sets);
}
