#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bookdraw/combined.hpp"
#include "bookdraw/crossings.hpp"
#include "bookdraw/vo.hpp"
#include "helpers.hpp"

using namespace bookdraw;
using testutil::order_of;

namespace {

std::int64_t one_page(const Graph& g, const VertexOrder& vo) {
    return count_crossings(g, vo, PageAssignment::single_page(g.m()));
}

}  // namespace

TEST_CASE("names round trip") {
    for (auto h : all_vo_heuristics()) CHECK(parse_vo(vo_name(h)) == h);
    CHECK(all_vo_heuristics().size() == 6);
    CHECK_FALSE(parse_vo("bfs").has_value());
}

TEST_CASE("every heuristic yields a deterministic permutation") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng.below(30));
        const auto max_m = static_cast<std::uint64_t>(n * (n - 1) / 4 + 1);
        const Graph g = testutil::random_graph(n, static_cast<int>(rng.below(max_m)), rng);
        for (auto h : all_vo_heuristics()) {
            const auto vo = compute_vo(g, h, 2, static_cast<std::uint64_t>(t));
            REQUIRE(vo.size() == n);
            REQUIRE(vo.is_permutation());
            REQUIRE(vo == compute_vo(g, h, 2, static_cast<std::uint64_t>(t)));
        }
    }
}

TEST_CASE("edgeless and disconnected inputs") {
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    for (auto h : all_vo_heuristics()) {
        CHECK(compute_vo(g, h, 2, 3).is_permutation());
        CHECK(compute_vo(Graph(5), h, 1, 3).is_permutation());
        CHECK(compute_vo(Graph(0), h, 1, 3).size() == 0);
    }
}

TEST_CASE("smlDgrDFS on a path walks it monotonically") {
    const Graph p = testutil::path(3);
    std::set<std::vector<Vertex>> seen;
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto vo = vo_smldgr_dfs(p, s);
        const std::vector<Vertex> order(vo.order().begin(), vo.order().end());
        CHECK((order == std::vector<Vertex>{0, 1, 2} || order == std::vector<Vertex>{2, 1, 0}));
        seen.insert(order);
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("smlDgrDFS on a star starts at a leaf then the center") {
    const Graph s = testutil::star(4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto vo = vo_smldgr_dfs(s, seed);
        CHECK(vo.at(0) != 0);
        CHECK(vo.at(1) == 0);
    }
}

TEST_CASE("smlDgrDFS prefers the smallest-degree neighbor") {
    // 5 is the only degree-1 vertex; 0 then picks 2 (degree 2) over 1 (degree 3).
    Graph g(6);
    g.add_edge(5, 0);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    const auto vo = vo_smldgr_dfs(g, 1);
    CHECK(vo.at(0) == 5);
    CHECK(vo.at(1) == 0);
    CHECK(vo.at(2) == 2);
}

TEST_CASE("randDFS on P4 is monotone once an endpoint is reached") {
    const Graph p = testutil::path(4);
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto vo = vo_rand_dfs(p, s);
        // DFS on a path from an interior vertex runs to one end, then jumps back.
        for (int i = 0; i + 1 < 4; ++i) {
            const Vertex a = vo.at(i);
            const Vertex b = vo.at(i + 1);
            if (a == 0 || a == 3) continue;  // after an endpoint, the walk may restart
            CHECK(std::abs(a - b) == 1);
        }
        if (vo.at(0) == 0 || vo.at(0) == 3) CHECK(one_page(p, vo) == 0);
    }
}

TEST_CASE("treeBFS lays trees out crossing free on one page") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const Graph tree = testutil::random_tree(2 + static_cast<int>(rng.below(60)), rng);
        CHECK(one_page(tree, vo_tree_bfs(tree, static_cast<std::uint64_t>(t))) == 0);
    }
}

TEST_CASE("treeBFS on a star rooted at the center") {
    const Graph s = testutil::star(4);
    bool rooted_at_center = false;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto vo = vo_tree_bfs(s, seed);
        if (vo.at(0) != 0) continue;
        rooted_at_center = true;
        for (int i = 1; i < 5; ++i) CHECK(vo.at(i) != 0);
    }
    CHECK(rooted_at_center);
}

TEST_CASE("treeBFS forest layout is crossing free on one page") {
    Rng rng(8);
    Graph g(30);
    const Graph a = testutil::random_tree(15, rng);
    const Graph b = testutil::random_tree(15, rng);
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(e.u + 15, e.v + 15);
    CHECK(one_page(g, vo_tree_bfs(g, 4)) == 0);
}

TEST_CASE("conCro on small cycles") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        CHECK(one_page(testutil::cycle(4), vo_con_cro(testutil::cycle(4), s)) == 0);
        CHECK(one_page(testutil::cycle(3), vo_con_cro(testutil::cycle(3), s)) == 0);
    }
}

TEST_CASE("conCro start vertex depends on the seed") {
    const Graph c = testutil::cycle(8);
    std::set<Vertex> starts;
    for (std::uint64_t s = 0; s < 50; ++s) starts.insert(vo_con_cro(c, s).at(0));
    CHECK(starts.size() > 1);
}

TEST_CASE("conGreedy on K4 leaves exactly one crossing") {
    const Graph k4 = testutil::complete(4);
    for (std::uint64_t s = 0; s < 50; ++s) CHECK(one_page(k4, vo_con_greedy(k4, s)) == 1);
}

TEST_CASE("conGreedy keeps trees crossing free on one page") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        const Graph tree = testutil::random_tree(3 + static_cast<int>(rng.below(40)), rng);
        CHECK(one_page(tree, vo_con_greedy(tree, static_cast<std::uint64_t>(t))) == 0);
    }
}

TEST_CASE("connectivity selector prefers most placed then fewest unplaced neighbors") {
    // Vertex 0 is placed first by force of a star with a pendant path.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    Rng rng(1);
    ConnectivitySelector sel(g, rng);
    sel.place(0);
    CHECK(sel.placed_neighbors(1) == 1);
    CHECK(sel.unplaced_neighbors(2) == 2);
    // 1 and 2 both have one placed neighbor; 1 has fewer unplaced neighbors.
    CHECK(sel.select() == 1);
    sel.place(1);
    CHECK(sel.select() == 2);
    sel.place(2);
    CHECK(sel.select() == 3);
    sel.place(3);
    CHECK(sel.select() == 4);
    sel.place(4);
    CHECK(sel.done());
}
