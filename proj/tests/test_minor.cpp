#include "doctest.h"

#include <random>

#include "minorlist/minor.hpp"
#include "oracles.hpp"

using namespace minorlist;

TEST_CASE("find_kt_minor basics") {
    auto k5 = complete_graph(5);
    auto r = find_kt_minor(k5, 5);
    REQUIRE(r.found());
    CHECK(r.model->order() == 5);
    CHECK(verify_minor_model(k5, *r.model).ok);
    for (auto& b : r.model->branch_sets) CHECK(b.size() == 1);

    CHECK(find_kt_minor(path_graph(4), 3).none());  // trees have no K3 minor
    CHECK(find_kt_minor(path_graph(4), 7).none());  // t > n
    CHECK(find_kt_minor(complete_graph(0), 1).none());

    auto one = find_kt_minor(path_graph(3), 1);
    REQUIRE(one.found());
    CHECK(one.model->order() == 1);

    CHECK_THROWS_AS(find_kt_minor(k5, 0), std::invalid_argument);
}

TEST_CASE("Petersen graph has a K5 minor") {
    auto pet = oracles::petersen();
    auto r = find_kt_minor(pet, 5);
    REQUIRE(r.found());
    CHECK(verify_minor_model(pet, *r.model).ok);
    CHECK(find_kt_minor(pet, 6).none());
}

TEST_CASE("returned models always pass verify_minor_model") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = oracles::random_graph(n, 0.5, rng);
        for (int t = 2; t <= 5; ++t) {
            auto r = find_kt_minor(g, t);
            if (r.found()) CHECK(verify_minor_model(g, *r.model).ok);
        }
    }
}

TEST_CASE("deficiency and general mode agree with the naive oracle on small graphs") {
    // exhaustive n <= 4, all t
    for (int n = 1; n <= 4; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
            auto g = oracles::graph_from_mask(n, mask);
            for (int t = 1; t <= n + 1; ++t) {
                bool expect = oracles::naive_has_kt_minor(g, t);
                auto r = find_kt_minor(g, t);
                REQUIRE(r.status != MinorStatus::BudgetExceeded);
                CHECK(r.found() == expect);
                if (r.found()) CHECK(verify_minor_model(g, *r.model).ok);
            }
        }
    }
    // spot checks at n = 6 where the two strategies cross over
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = oracles::random_graph(6, 0.45, rng);
        for (int t = 3; t <= 5; ++t) {
            bool expect = oracles::naive_has_kt_minor(g, t);
            CHECK(find_kt_minor(g, t).found() == expect);
        }
    }
}

TEST_CASE("budget exhaustion is reported distinctly") {
    auto pet = oracles::petersen();
    auto r = find_kt_minor(pet, 5, 3);
    CHECK(r.status == MinorStatus::BudgetExceeded);
    CHECK_FALSE(r.model.has_value());
}

TEST_CASE("search is deterministic") {
    auto pet = oracles::petersen();
    auto a = find_kt_minor(pet, 5);
    auto b = find_kt_minor(pet, 5);
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.model->branch_sets == b.model->branch_sets);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("clique-sums preserve K_t-minor-freeness on random pairs") {
    std::mt19937_64 rng(2024);
    int done = 0;
    int attempts = 0;
    while (done < 100 && attempts < 20000) {
        ++attempts;
        int t = (done % 2 == 0) ? 4 : 5;
        int n1 = 4 + static_cast<int>(rng() % 4), n2 = 4 + static_cast<int>(rng() % 4);
        double p = (t == 4) ? 0.35 : 0.5;
        auto g1 = oracles::random_graph(n1, p, rng);
        auto g2 = oracles::random_graph(n2, p, rng);
        if (!find_kt_minor(g1, t).none() || !find_kt_minor(g2, t).none()) continue;
        // random shared clique of size 1..3 found by scanning
        int want = 1 + static_cast<int>(rng() % 3);
        std::vector<int> s1, s2;
        for (int u = 0; u < n1 && static_cast<int>(s1.size()) < want; ++u) {
            bool ok = true;
            for (int v : s1) ok = ok && g1.adjacent(u, v);
            if (ok) s1.push_back(u);
        }
        for (int u = 0; u < n2 && s2.size() < s1.size(); ++u) {
            bool ok = true;
            for (int v : s2) ok = ok && g2.adjacent(u, v);
            if (ok) s2.push_back(u);
        }
        if (s1.size() != s2.size()) continue;
        auto sum = clique_sum(g1, s1, g2, s2);
        auto r = find_kt_minor(sum.graph, t);
        REQUIRE(r.status != MinorStatus::BudgetExceeded);
        CHECK(r.none());
        ++done;
    }
    CHECK(done == 100);
}
