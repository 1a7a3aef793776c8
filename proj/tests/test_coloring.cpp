#include <doctest.h>

#include <random>

#include "critsets/coloring.hpp"
#include "critsets/error.hpp"
#include "oracles.hpp"

using namespace critsets;

namespace {

std::vector<Graph> small_atlas(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (auto& g : graph_atlas(n)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}

TEST_SUITE("coloring") {

TEST_CASE("properness") {
    const auto c4 = make_cycle(4);
    CHECK(is_proper(c4, {{0, 1, 0, 1}, 2}));
    CHECK_FALSE(is_proper(c4, {{0, 0, 1, 1}, 2}));
    CHECK_FALSE(is_proper(c4, {{0, 1, 0, 2}, 2})); // color outside the palette
    CHECK_FALSE(is_proper(c4, {{0, 1, 0}, 2}));
    CHECK(to_string(Coloring{{0, 1, 2}, 3}) == "(0,1,2)");
}

TEST_CASE("chromatic number matches brute force") {
    for (const auto& g : small_atlas(6)) {
        CHECK(chromatic_number(g) == oracle::chromatic(g));
    }
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(make_complete(12)) == 12);
    CHECK(chromatic_number(make_cycle(31)) == 3);
}

TEST_CASE("coloring counts follow the cycle chromatic polynomial") {
    for (std::size_t n = 3; n <= 9; ++n) {
        for (int k = 2; k <= 4; ++k) {
            const auto count = all_proper_colorings(make_cycle(n), k).size();
            CHECK(static_cast<long long>(count) == oracle::cycle_chromatic_polynomial(n, k));
        }
    }
}

TEST_CASE("C5 has 30 optimal colorings and 5 representatives") {
    const auto c5 = make_cycle(5);
    CHECK(all_proper_colorings(c5, 3).size() == 30);
    const auto reps = enumerate_optimal_colorings(c5);
    REQUIRE(reps.size() == 5);
    CHECK(reps.front().colors == std::vector<int>{0, 1, 0, 1, 2});
    for (std::size_t i = 1; i < reps.size(); ++i) {
        CHECK(reps[i - 1].colors < reps[i].colors);
    }
}

TEST_CASE("enumeration agrees with the odometer") {
    for (const auto& g : small_atlas(5)) {
        const int chi = static_cast<int>(oracle::chromatic(g));
        for (int k = chi; k <= chi + 1; ++k) {
            const auto mine = all_proper_colorings(g, k);
            const auto ref = oracle::proper_colorings(g, k);
            REQUIRE(mine.size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(mine[i].colors == ref[i]);
                CHECK(mine[i].palette == k);
            }
        }
        // One representative per palette permutation, each with colors in first-use order.
        const auto reps = enumerate_optimal_colorings(g);
        CHECK(reps.size() * factorial(static_cast<std::size_t>(chi)) == oracle::optimal_colorings(g).size());
        for (const auto& c : reps) {
            int next = 0;
            for (int x : c.colors) {
                CHECK(x <= next);
                next = std::max(next, x + 1);
            }
            CHECK(next == chi);
        }
        CHECK(is_uniquely_colorable(g) == (reps.size() == 1));
    }
}

TEST_CASE("find_coloring") {
    CHECK_FALSE(find_coloring(make_complete(4), 3));
    CHECK_FALSE(find_coloring(make_cycle(7), 2));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto c = find_coloring(make_cycle(9), 3, &rng);
        REQUIRE(c);
        CHECK(is_proper(make_cycle(9), *c));
    }
    const auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    const auto c = find_coloring(g, 3);
    REQUIRE(c);
    CHECK(is_proper(g, *c));
    CHECK_THROWS_AS(find_coloring(make_path(2), 65), Error);
}

TEST_CASE("count_extensions matches direct counting") {
    std::mt19937_64 rng(11);
    const std::vector<Graph> graphs{make_cycle(5), make_cycle(6), make_complete(4), make_path(5),
                                    complement(make_cycle(6)), add_pendant_to_each(make_complete(3))};
    for (const auto& g : graphs) {
        const int k = static_cast<int>(oracle::chromatic(g));
        const auto pool = oracle::proper_colorings(g, k);
        for (int trial = 0; trial < 60; ++trial) {
            PartialAssignment p = PartialAssignment::empty(g.order(), k);
            for (Vertex v = 0; v < g.order(); ++v) {
                if (rng() % 2) {
                    p.support.insert(v);
                    p.colors[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
                }
            }
            std::size_t expected = 0;
            for (const auto& d : pool) {
                bool agree = true;
                p.support.for_each([&](Vertex v) { agree = agree && d[v] == p.colors[v]; });
                expected += agree ? 1 : 0;
            }
            CHECK(count_extensions(g, p, 1000000) == expected);
            CHECK(count_extensions(g, p, 2) == std::min<std::uint64_t>(expected, 2));
        }
    }
}

TEST_CASE("colorful vertices") {
    const auto c5 = make_cycle(5);
    const Coloring c{{0, 1, 0, 1, 2}, 3};
    // Closed neighborhoods: v3 sees {0,1,2}, v4 sees {1,2,0}, v0 sees {2,0,1}.
    CHECK(colorful_vertices(c5, c).elements() == std::vector<Vertex>{0, 3, 4});
    const auto k3 = make_complete(3);
    CHECK(colorful_vertices(k3, {{0, 1, 2}, 3}).size() == 3);
}

TEST_CASE("search limits") {
    SearchLimits tight;
    tight.max_colorings = 10;
    CHECK_THROWS_AS(all_proper_colorings(make_empty(4), 2, tight), Error);
    SearchLimits small;
    small.exact_vertices = 4;
    CHECK_THROWS_AS(enumerate_optimal_colorings(make_cycle(5), small), Error);
    try {
        enumerate_optimal_colorings(make_cycle(5), small);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::size_limit);
    }
}

}
