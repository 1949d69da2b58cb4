#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bookdraw/crossings.hpp"
#include "bookdraw/graph.hpp"
#include "bookdraw/io.hpp"
#include "bookdraw/rng.hpp"
#include "helpers.hpp"

using namespace bookdraw;
using namespace testutil;

TEST_CASE("graph rejects self-loops, duplicates and bad ids") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.check_invariants());
}

TEST_CASE("graph adjacency mirrors the edge list") {
    Rng rng(3);
    const Graph g = random_graph(20, 50, rng);
    CHECK(g.check_invariants());
    std::size_t total = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        total += g.incident(v).size();
        for (const auto& inc : g.incident(v)) CHECK(g.edge(inc.edge).other(v) == inc.neighbor);
    }
    CHECK(total == 2 * static_cast<std::size_t>(g.m()));
}

TEST_CASE("vertex order keeps position and order inverse") {
    VertexOrder vo({2, 0, 3, 1});
    CHECK(vo.is_permutation());
    CHECK(vo.position(2) == 0);
    CHECK(vo.at(3) == 1);
    vo.move(2, 3);
    CHECK(std::vector<Vertex>(vo.order().begin(), vo.order().end()) == std::vector<Vertex>{0, 3, 1, 2});
    for (int p = 0; p < 4; ++p) CHECK(vo.position(vo.at(p)) == p);
    vo.swap_adjacent(0);
    CHECK(vo.at(0) == 3);
    CHECK(vo.position(0) == 1);
    CHECK_THROWS_AS(VertexOrder({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("page assignment bounds") {
    PageAssignment pa(3, 2);
    CHECK_FALSE(pa.is_complete());
    pa.assign(0, 1);
    CHECK_THROWS_AS(pa.assign(1, 2), std::out_of_range);
    CHECK_THROWS_AS(PageAssignment(3, 0), std::invalid_argument);
}

TEST_CASE("book drawing validates coverage and drops its cache on mutation") {
    const Graph g = complete(4);
    CHECK_THROWS_AS(BookDrawing(g, VertexOrder::identity(3), PageAssignment::single_page(6)), std::invalid_argument);
    CHECK_THROWS_AS(BookDrawing(g, VertexOrder::identity(4), PageAssignment::single_page(5)), std::invalid_argument);
    BookDrawing d(g, VertexOrder::identity(4), PageAssignment::single_page(6, 2));
    CHECK(d.crossings() == 1);
    CHECK(d.cached_crossings() == 1);
    std::vector<Page> pages(6, 0);
    pages[static_cast<std::size_t>(1)] = 1;  // edge (0,2)
    d.set_pa(PageAssignment(pages, 2));
    CHECK_FALSE(d.cached_crossings().has_value());
    CHECK(d.crossings() == 0);
}

TEST_CASE("edges_cross on the four-vertex spine") {
    const VertexOrder vo = VertexOrder::identity(4);
    CHECK(edges_cross(Edge(0, 2), Edge(1, 3), vo));
    CHECK_FALSE(edges_cross(Edge(0, 1), Edge(2, 3), vo));
    CHECK_FALSE(edges_cross(Edge(0, 3), Edge(1, 2), vo));
    CHECK_FALSE(edges_cross(Edge(0, 2), Edge(2, 3), vo));
}

TEST_CASE("crossing counts of complete graphs on one page") {
    for (auto count : {count_crossings_reference(complete(4), VertexOrder::identity(4), PageAssignment::single_page(6)),
                       count_crossings(complete(4), VertexOrder::identity(4), PageAssignment::single_page(6))})
        CHECK(count == 1);
    const Graph k5 = complete(5);
    CHECK(count_crossings(k5, VertexOrder::identity(5), PageAssignment::single_page(10)) == 5);
    CHECK(count_crossings_reference(k5, VertexOrder::identity(5), PageAssignment::single_page(10)) == 5);
}

TEST_CASE("tree in DFS preorder has no crossings on one page") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_tree(40, rng);
        std::vector<Vertex> order;
        std::vector<char> seen(40, 0);
        std::vector<Vertex> stack{0};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
            for (const auto& inc : g.incident(v))
                if (!seen[static_cast<std::size_t>(inc.neighbor)]) stack.push_back(inc.neighbor);
        }
        const VertexOrder vo(order);
        CHECK(count_crossings(g, vo, PageAssignment::single_page(g.m())) == 0);
        CHECK(count_crossings_reference(g, vo, PageAssignment::single_page(g.m())) == 0);
    }
}

TEST_CASE("fast counter agrees with the reference on random drawings") {
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int n = static_cast<int>(rng.between(1, 40));
        const auto max_m = n * (n - 1) / 2;
        const int m = static_cast<int>(rng.between(0, std::min<std::int64_t>(max_m, 3 * n)));
        const int k = static_cast<int>(rng.between(1, 5));
        const Graph g = random_graph(n, m, rng);
        const BookDrawing d = random_drawing(g, k, rng);
        REQUIRE(count_crossings(d) == count_crossings_reference(d));
    }
}

TEST_CASE("crossing count is invariant under reversal, rotation and page relabeling") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_graph(15, 40, rng);
        const BookDrawing d = random_drawing(g, 3, rng);
        const std::int64_t c = count_crossings(d);
        CHECK(count_crossings(g, d.vo().reversed(), d.pa()) == c);

        std::vector<Vertex> rotated(d.vo().order().begin(), d.vo().order().end());
        std::rotate(rotated.begin(), rotated.begin() + 1 + t % 14, rotated.end());
        CHECK(count_crossings(g, VertexOrder(rotated), d.pa()) == c);

        std::vector<Page> relabeled(d.pa().pages().begin(), d.pa().pages().end());
        for (auto& p : relabeled) p = (p + 1) % 3;
        CHECK(count_crossings(g, d.vo(), PageAssignment(relabeled, 3)) == c);
    }
}

TEST_CASE("crossings_of_edge examples") {
    const Graph k4 = complete(4);
    const VertexOrder id4 = VertexOrder::identity(4);
    PageAssignment pa(k4.m(), 2);
    EdgeId e13 = -1, e24 = -1;
    for (EdgeId e = 0; e < k4.m(); ++e) {
        if (k4.edge(e) == Edge(0, 2)) e13 = e;
        if (k4.edge(e) == Edge(1, 3)) e24 = e;
    }
    pa.assign(e13, 0);
    CHECK(crossings_of_edge(k4, id4, pa, e24, 0) == 1);
    CHECK(crossings_of_edge(k4, id4, pa, e24, 1) == 0);

    const Graph k5 = complete(5);
    PageAssignment pa5(k5.m(), 1);
    EdgeId e14 = -1;
    for (EdgeId e = 0; e < k5.m(); ++e) {
        if (k5.edge(e) == Edge(0, 3)) e14 = e;
        else pa5.assign(e, 0);
    }
    CHECK(crossings_of_edge(k5, VertexOrder::identity(5), pa5, e14, 0) == 2);
}

TEST_CASE("per-edge crossings sum to twice the total") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(12, 30, rng);
        const BookDrawing d = random_drawing(g, 2, rng);
        std::int64_t sum = 0;
        for (EdgeId e = 0; e < g.m(); ++e) sum += crossings_of_edge(d, e, d.pa().page(e));
        CHECK(sum == 2 * d.crossings());
    }
}

TEST_CASE("vertex_move_delta on C4") {
    // Cycle 1-2-3-4 (ids 0..3) drawn in order (1,3,2,4).
    const Graph c4 = cycle(4);
    const BookDrawing d(c4, VertexOrder({0, 2, 1, 3}), PageAssignment::single_page(4));
    CHECK(d.crossings() == 1);
    CHECK(vertex_move_delta(d, 2, d.vo().position(2)) == 0);
    // Vertex 3 (id 2) to the third spine slot gives the identity order.
    CHECK(vertex_move_delta(d, 2, 2) == -1);
    VertexOrder after = d.vo();
    after.move(2, 2);
    CHECK(count_crossings(c4, after, d.pa()) == 0);
}

TEST_CASE("vertex_move_delta matches recount on random moves") {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(14, 35, rng);
        const BookDrawing d = random_drawing(g, 1 + t % 3, rng);
        const auto v = static_cast<Vertex>(rng.below(14));
        const auto pos = static_cast<int>(rng.below(14));
        VertexOrder after = d.vo();
        after.move(v, pos);
        CHECK(vertex_move_delta(d, v, pos) == count_crossings(g, after, d.pa()) - d.crossings());
    }
}

TEST_CASE("slot costs match insertion by brute force") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const int len = static_cast<int>(rng.between(3, 12));
        SlotCosts sc(len);
        const int anchor = static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
        std::vector<std::pair<int, int>> chords;
        for (int i = 0; i < 6; ++i) {
            int lo = static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
            int hi = static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
            if (lo == hi || lo == anchor || hi == anchor) continue;
            chords.emplace_back(lo, hi);
            sc.add_pair(anchor, lo, hi);
        }
        const auto costs = sc.costs();
        REQUIRE(costs.size() == static_cast<std::size_t>(len + 1));
        for (int s = 0; s <= len; ++s) {
            // New vertex sits between positions s-1 and s; shift existing positions >= s.
            auto shift = [s](int p) { return p >= s ? p + 1 : p; };
            std::int64_t expect = 0;
            for (auto [lo, hi] : chords)
                if (chords_alternate(shift(anchor), s, shift(lo), shift(hi))) ++expect;
            CHECK(costs[static_cast<std::size_t>(s)] == expect);
        }
    }
}

TEST_CASE("graph and drawing text round trip") {
    const Graph g = complete(5);
    std::stringstream gs;
    write_graph(gs, g);
    const Graph back = read_graph(gs);
    CHECK(back.n() == 5);
    CHECK(back.m() == 10);
    for (EdgeId e = 0; e < g.m(); ++e) CHECK(back.edge(e) == g.edge(e));

    Rng rng(1);
    const BookDrawing d = random_drawing(g, 3, rng);
    std::stringstream ds;
    write_drawing(ds, d);
    const ParsedDrawing p = read_drawing(ds, 3);
    CHECK(p.drawing.vo() == d.vo());
    CHECK(p.drawing.pa() == d.pa());
    CHECK(p.declared_crossings == d.crossings());
}

TEST_CASE("malformed text raises ParseError") {
    std::istringstream a("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(a), ParseError);
    std::istringstream b("2 1\n0 0\n");
    CHECK_THROWS_AS(read_graph(b), ParseError);
    std::istringstream c("x\n");
    CHECK_THROWS_AS(read_graph(c), ParseError);
    std::istringstream d("3 1\n0 1\n0 1 1\n0\n");
    CHECK_THROWS_AS(read_drawing(d), ParseError);
}

TEST_CASE("rng streams are deterministic and bounded") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    std::vector<int> hist(5, 0);
    for (int i = 0; i < 50000; ++i) {
        const auto x = r.below(5);
        REQUIRE(x < 5);
        ++hist[static_cast<std::size_t>(x)];
    }
    for (int h : hist) CHECK(std::abs(h - 10000) < 500);
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("tie breaker is uniform over tied keys") {
    Rng rng(8);
    std::vector<int> wins(4, 0);
    for (int t = 0; t < 8000; ++t) {
        TieBreaker<int> tb(rng);
        int pick = -1;
        const int keys[] = {3, 1, 1, 1, 1, 2};
        for (int i = 0; i < 6; ++i)
            if (tb.offer(keys[i], [](int a, int b) { return a < b; })) pick = i;
        REQUIRE(pick >= 1);
        REQUIRE(pick <= 4);
        ++wins[static_cast<std::size_t>(pick - 1)];
    }
    for (int w : wins) CHECK(std::abs(w - 2000) < 200);
}
