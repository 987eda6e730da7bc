#include "doctest.h"

#include "minorlist/choosability.hpp"
#include "oracles.hpp"

using namespace minorlist;

TEST_CASE("K4 with lambda {1,1,1,1} is choosable (4-colourability)") {
    auto v = lambda_choosable_small(complete_graph(4), Lambda({1, 1, 1, 1}));
    CHECK(v.choosable());
    CHECK(v.assignments_tried == 1);  // singleton classes admit one canonical assignment
}

TEST_CASE("K4 with lambda {3} yields a witness immediately") {
    auto v = lambda_choosable_small(complete_graph(4), Lambda({3}));
    REQUIRE(v.witness());
    // first canonical assignment: everyone holds the same three colours
    for (auto& l : v.witness_lists->lists) CHECK(l.size() == 3);
    CHECK_FALSE(find_coloring(complete_graph(4), *v.witness_lists));
    CHECK(is_valid_assignment(complete_graph(4), *v.witness_lists, Lambda({3}), *v.witness_classes).ok);
}

TEST_CASE("C4 with lambda {2} is choosable by exhaustive canonical enumeration") {
    auto v = lambda_choosable_small(cycle_graph(4), Lambda({2}));
    CHECK(v.choosable());
    CHECK(v.assignments_tried > 100);  // a genuine enumeration, not a shortcut
}

TEST_CASE("K5 is not {1,1,2}-choosable and the witness verifies") {
    auto v = lambda_choosable_small(complete_graph(5), Lambda({2, 1, 1}));
    REQUIRE(v.witness());
    CHECK(is_valid_assignment(complete_graph(5), *v.witness_lists, Lambda({2, 1, 1}), *v.witness_classes).ok);
    CHECK_FALSE(find_coloring(complete_graph(5), *v.witness_lists));
}

TEST_CASE("budget exhaustion is a distinct verdict") {
    auto v = lambda_choosable_small(cycle_graph(4), Lambda({2}), {}, 5);
    CHECK(v.kind == ChoosableVerdict::Kind::CapExceeded);
    CHECK(v.assignments_tried == 5);
}

TEST_CASE("caps below the quota are rejected") {
    std::vector<int> caps{1};
    CHECK_THROWS_AS(lambda_choosable_small(complete_graph(3), Lambda({2}), caps), std::invalid_argument);
}

TEST_CASE("witnesses transfer down the order (contrapositive monotonicity, small scope)") {
    // lambda pairs with leq_order(lam, lam2); any witness for lam2 forces one
    // for lam.  Graphs: all on 4 vertices plus a couple of 5-vertex ones.
    std::vector<Lambda> lams{Lambda({1}), Lambda({2}), Lambda({1, 1}), Lambda({3}), Lambda({2, 1}),
                             Lambda({1, 1, 1}), Lambda({4}), Lambda({2, 2}), Lambda({2, 1, 1}),
                             Lambda({3, 1}), Lambda({1, 1, 1, 1})};
    std::vector<Graph> graphs;
    for (uint64_t mask = 0; mask < 64; ++mask) graphs.push_back(oracles::graph_from_mask(4, mask));
    graphs.push_back(complete_graph(5));
    graphs.push_back(oracles::wheel(4));

    for (auto& g : graphs) {
        std::vector<bool> witness(lams.size());
        for (size_t i = 0; i < lams.size(); ++i)
            witness[i] = lambda_choosable_small(g, lams[i], {}, 20000).witness();
        for (size_t i = 0; i < lams.size(); ++i)
            for (size_t j = 0; j < lams.size(); ++j)
                if (leq_order(lams[i], lams[j]) && witness[j]) CHECK(witness[i]);
    }
}
