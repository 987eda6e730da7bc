#include "doctest.h"

#include <random>

#include "minorlist/solver.hpp"
#include "oracles.hpp"

using namespace minorlist;

namespace {

ListAssignment uniform_lists(int n, std::vector<int> colors) {
    ListAssignment l;
    l.lists.assign(n, colors);
    return l;
}

ListAssignment random_lists(int n, int list_size, int palette, std::mt19937_64& rng) {
    ListAssignment l;
    l.lists.assign(n, {});
    for (int v = 0; v < n; ++v) {
        std::vector<int> pool(palette);
        for (int i = 0; i < palette; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(list_size);
        sort_unique(pool);
        l.lists[v] = pool;
    }
    return l;
}

}  // namespace

TEST_CASE("is_valid_assignment") {
    auto k3 = complete_graph(3);
    Lambda lam({1, 1, 1});
    ColourClasses c{{{0}, {1}, {2}}};
    auto l = uniform_lists(3, {0, 1, 2});
    CHECK(is_valid_assignment(k3, l, lam, c).ok);

    // quota violation names vertex and class
    l.lists[1] = {0, 2};
    auto r = is_valid_assignment(k3, l, lam, c);
    CHECK_FALSE(r.ok);
    CHECK(r.vertex == 1);
    CHECK(r.class_index == 1);

    // overlapping classes rejected
    ColourClasses bad{{{0, 1}, {1}, {2}}};
    CHECK_FALSE(is_valid_assignment(k3, uniform_lists(3, {0, 1, 2}), lam, bad).ok);

    // misalignment is invalid input, not a false verdict
    CHECK_THROWS_AS(is_valid_assignment(k3, l, Lambda({2}), c), std::invalid_argument);
}

TEST_CASE("deleting a colour never turns an invalid assignment valid") {
    std::mt19937_64 rng(5150);
    Lambda lam({2, 1});
    for (int iter = 0; iter < 50; ++iter) {
        int n = 3 + static_cast<int>(rng() % 3);
        auto g = oracles::random_graph(n, 0.5, rng);
        ColourClasses c{{{0, 1, 2, 3}, {4}}};
        auto l = random_lists(n, 3, 5, rng);
        bool before = is_valid_assignment(g, l, lam, c).ok;
        int v = static_cast<int>(rng() % n);
        if (l.lists[v].size() <= 1) continue;
        l.lists[v].erase(l.lists[v].begin() + rng() % l.lists[v].size());
        bool after = is_valid_assignment(g, l, lam, c).ok;
        if (!before) CHECK_FALSE(after);
    }
}

TEST_CASE("find_coloring on K3 with identical 3-lists is a bijection") {
    auto k3 = complete_graph(3);
    auto col = find_coloring(k3, uniform_lists(3, {1, 2, 3}));
    REQUIRE(col.has_value());
    std::vector<int> sorted = *col;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3});
}

TEST_CASE("find_coloring extension mode and input validation") {
    auto p3 = path_graph(3);
    auto l = uniform_lists(3, {0, 1});
    auto col = find_coloring(p3, l, {{0, 0}});
    REQUIRE(col.has_value());
    CHECK((*col)[0] == 0);
    CHECK((*col)[1] != 0);

    CHECK_THROWS_AS(find_coloring(p3, l, {{0, 7}}), std::invalid_argument);       // outside list
    auto k2 = complete_graph(2);
    CHECK_THROWS_AS(find_coloring(k2, uniform_lists(2, {0, 1}), {{0, 0}, {1, 0}}),
                    std::invalid_argument);  // improper partial
}

TEST_CASE("find_coloring agrees with product enumeration on random instances") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto g = oracles::random_graph(n, 0.55, rng);
        auto l = random_lists(n, 3, 6, rng);
        bool expect = oracles::naive_colorable(g, l);
        auto got = find_coloring(g, l);
        CHECK(got.has_value() == expect);
        if (got) {
            for (int v = 0; v < n; ++v)
                CHECK(std::binary_search(l.lists[v].begin(), l.lists[v].end(), (*got)[v]));
            for (auto [u, v] : g.edges()) CHECK((*got)[u] != (*got)[v]);
        }
    }
}

TEST_CASE("clique_sdr basics") {
    auto r = clique_sdr({{1, 2}, {1, 2}});
    REQUIRE(r);
    CHECK((*r.reps)[0] != (*r.reps)[1]);

    auto none = clique_sdr({{1}, {1}});
    CHECK_FALSE(none);
    CHECK(none.hall_violator == std::vector<int>{0, 1});

    // 50 lists over a 49-colour pool: violator is everything
    std::vector<std::vector<int>> lists;
    std::vector<int> pool(49);
    for (int i = 0; i < 49; ++i) pool[i] = i;
    for (int i = 0; i < 50; ++i) lists.push_back(pool);
    auto big = clique_sdr(lists);
    CHECK_FALSE(big);
    CHECK(big.hall_violator.size() == 50);
}

TEST_CASE("find_coloring routes cliques through clique_sdr consistently") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 7; ++n) {
        for (int iter = 0; iter < 25; ++iter) {
            auto g = complete_graph(n);
            auto l = random_lists(n, 2 + static_cast<int>(rng() % 3), n + 2, rng);
            std::vector<std::vector<int>> raw(l.lists.begin(), l.lists.end());
            CHECK(find_coloring(g, l).has_value() == clique_sdr(raw).reps.has_value());
        }
    }
}

TEST_CASE("find_bfold") {
    // C5 with 5 colours admits a 2-fold colouring (fractional chromatic 5/2)
    auto c5 = cycle_graph(5);
    auto r = find_bfold(c5, uniform_lists(5, {1, 2, 3, 4, 5}), 2);
    REQUIRE(r);
    for (auto [u, v] : c5.edges()) {
        std::vector<int> inter;
        std::set_intersection(r.fold->sets[u].begin(), r.fold->sets[u].end(), r.fold->sets[v].begin(),
                              r.fold->sets[v].end(), std::back_inserter(inter));
        CHECK(inter.empty());
    }

    // K2 with lists {1,2} cannot take two disjoint 2-sets
    auto k2 = complete_graph(2);
    CHECK_FALSE(find_bfold(k2, uniform_lists(2, {1, 2}), 2));

    // short list reported immediately
    auto short_list = find_bfold(k2, ListAssignment{{{1}, {1, 2}}}, 2);
    CHECK_FALSE(short_list);
    CHECK(short_list.reason.find("fewer than b") != std::string::npos);
}

TEST_CASE("find_bfold with b=1 agrees with find_coloring on random instances") {
    std::mt19937_64 rng(408);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto g = oracles::random_graph(n, 0.5, rng);
        auto l = random_lists(n, 2 + static_cast<int>(rng() % 3), 6, rng);
        CHECK(find_bfold(g, l, 1).fold.has_value() == find_coloring(g, l).has_value());
    }
}

TEST_CASE("enumerate_colorings counts properly and in canonical order") {
    auto k3 = complete_graph(3);
    std::vector<Coloring> seen;
    auto count = enumerate_colorings(k3, uniform_lists(3, {0, 1, 2}), [&](const Coloring& c) {
        seen.push_back(c);
        return true;
    });
    CHECK(count == 6);
    CHECK(seen.front() == Coloring{0, 1, 2});
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}
