#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bookdraw/oracle.hpp"
#include "helpers.hpp"

using namespace bookdraw;

TEST_CASE("complete graph book crossing numbers") {
    CHECK(exact_book_crossing_number(testutil::complete(4), 2).crossings == 0);
    CHECK(exact_book_crossing_number(testutil::complete(4), 1).crossings == 1);
    CHECK(exact_book_crossing_number(testutil::complete(5), 3).crossings == 0);
    CHECK(exact_book_crossing_number(testutil::complete(5), 2).crossings == 1);
    CHECK(exact_book_crossing_number(testutil::complete(5), 1).crossings == 5);
}

TEST_CASE("exact value matches brute force and its witness") {
    Rng rng(50);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const int max_m = std::min(n * (n - 1) / 2, 8);
        const Graph g = testutil::random_graph(n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m))), rng);
        const int k = 1 + static_cast<int>(rng.below(3));
        const auto r = exact_book_crossing_number(g, k);
        CHECK(r.crossings == testutil::brute_force_bcn(g, k));
        CHECK(count_crossings_reference(r.witness) == r.crossings);
        CHECK(r.witness.k() == k);
        CHECK_NOTHROW(r.witness.validate());
    }
}

TEST_CASE("trees and edgeless graphs") {
    Rng rng(51);
    CHECK(exact_book_crossing_number(testutil::random_tree(9, rng), 1).crossings == 0);
    CHECK(exact_book_crossing_number(Graph(5), 1).crossings == 0);
    CHECK(exact_book_crossing_number(Graph(0), 2).crossings == 0);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(exact_book_crossing_number(Graph(10), 1), SizeGuardError);
    CHECK_THROWS_AS(exact_book_crossing_number(testutil::complete(6), 2), SizeGuardError);
    CHECK(exact_book_crossing_number(testutil::complete(6), 3, true).crossings == 0);
    Rng rng(52);
    const Graph big = testutil::random_graph(20, 41, rng);
    CHECK_THROWS_AS(exact_pa(big, VertexOrder::identity(20), 2), SizeGuardError);
}

TEST_CASE("exact page assignment") {
    const Graph k4 = testutil::complete(4);
    CHECK(exact_pa(k4, VertexOrder::identity(4), 2).crossings == 0);
    CHECK(exact_pa(testutil::path(6), VertexOrder(std::vector<Vertex>{0, 3, 1, 4, 2, 5}), 1).crossings ==
          count_crossings(testutil::path(6), VertexOrder(std::vector<Vertex>{0, 3, 1, 4, 2, 5}),
                          PageAssignment::single_page(5)));
    Rng rng(53);
    for (int t = 0; t < 60; ++t) {
        const Graph g = testutil::random_graph(9, 13, rng);
        const auto vo = VertexOrder(random_permutation(9, rng));
        const int k = 1 + static_cast<int>(rng.below(3));
        const auto r = exact_pa(g, vo, k);
        CHECK(r.crossings == testutil::brute_force_pa(g, vo, k));
        CHECK(count_crossings(g, vo, r.pa) == r.crossings);
        CHECK(r.pa.is_complete());
    }
}

TEST_CASE("exact page assignment scales to its guard") {
    Rng rng(54);
    const Graph g = testutil::random_graph(16, 40, rng);
    const auto vo = VertexOrder(random_permutation(16, rng));
    const auto r = exact_pa(g, vo, 3);
    CHECK(count_crossings(g, vo, r.pa) == r.crossings);
}
