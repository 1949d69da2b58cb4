#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bookdraw/combined.hpp"
#include "helpers.hpp"

using namespace bookdraw;

TEST_CASE("trees are drawn without crossings") {
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const Graph tree = testutil::random_tree(2 + static_cast<int>(rng.below(80)), rng);
        const int k = 1 + t % 4;
        CHECK(con_greedy_plus(tree, k, static_cast<std::uint64_t>(t)).crossings() == 0);
    }
}

TEST_CASE("K4 on two pages reaches zero from every seed") {
    const Graph k4 = testutil::complete(4);
    for (std::uint64_t s = 0; s < 50; ++s) CHECK(con_greedy_plus(k4, 2, s).crossings() == 0);
}

TEST_CASE("K4 on one page keeps its single crossing") {
    CHECK(con_greedy_plus(testutil::complete(4), 1, 3).crossings() == 1);
}

TEST_CASE("drawings are valid and deterministic") {
    Rng rng(40);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng.below(30));
        const Graph g = testutil::random_graph(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n * (n - 1) / 3 + 1))), rng);
        const int k = 1 + static_cast<int>(rng.below(4));
        const auto d = con_greedy_plus(g, k, static_cast<std::uint64_t>(t));
        REQUIRE_NOTHROW(d.validate());
        CHECK(d.k() == k);
        CHECK(d.vo().is_permutation());
        CHECK(d.pa().is_complete());
        const auto again = con_greedy_plus(g, k, static_cast<std::uint64_t>(t));
        CHECK(again.vo() == d.vo());
        CHECK(again.pa() == d.pa());
        CHECK(d.crossings() == count_crossings_reference(d));
    }
}

TEST_CASE("the chosen slot is the cheapest and costs add up") {
    Rng rng(41);
    const Graph g = testutil::random_graph(25, 80, rng);
    std::int64_t total = 0;
    int steps = 0;
    const auto d = con_greedy_plus(g, 3, 9, [&](const PlacementStep& step) {
        ++steps;
        REQUIRE(step.chosen_slot >= 0);
        REQUIRE(step.chosen_slot < static_cast<int>(step.slot_costs.size()));
        const auto chosen = step.slot_costs[static_cast<std::size_t>(step.chosen_slot)];
        for (std::size_t s = 0; s < step.slot_costs.size(); ++s) {
            CHECK(chosen <= step.slot_costs[s]);
            if (static_cast<int>(s) < step.chosen_slot) CHECK(chosen < step.slot_costs[s]);
        }
        total += chosen;
    });
    CHECK(steps == 25);
    CHECK(total == d.crossings());
}

TEST_CASE("the spine order does not depend on keeping the pages") {
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        const Graph g = testutil::random_graph(20, 50, rng);
        CHECK(vo_con_greedy_plus(g, 2, static_cast<std::uint64_t>(t)) == con_greedy_plus(g, 2, static_cast<std::uint64_t>(t)).vo());
        CHECK(compute_vo(g, VoHeuristic::ConGreedyPlus, 2, static_cast<std::uint64_t>(t)) ==
              vo_con_greedy_plus(g, 2, static_cast<std::uint64_t>(t)));
    }
}

TEST_CASE("rejects zero pages") {
    CHECK_THROWS_AS(con_greedy_plus(testutil::complete(3), 0, 1), std::invalid_argument);
}
