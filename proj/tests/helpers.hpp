#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "bookdraw/crossings.hpp"
#include "bookdraw/graph.hpp"
#include "bookdraw/rng.hpp"

namespace testutil {

using namespace bookdraw;

inline Graph complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

/// Uniform random labeled tree via random attachment.
inline Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    const auto perm = random_permutation(n, rng);
    for (int i = 1; i < n; ++i)
        g.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)))]);
    return g;
}

/// G(n, m) by rejection; m must be well below the complete graph.
inline Graph random_graph(int n, int m, Rng& rng) {
    Graph g(n);
    while (g.m() < m) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

inline VertexOrder order_of(std::vector<Vertex> order) { return VertexOrder(std::move(order)); }

inline PageAssignment random_pa(int m, int k, Rng& rng) {
    std::vector<Page> pages(static_cast<std::size_t>(m));
    for (auto& p : pages) p = static_cast<Page>(rng.below(static_cast<std::uint64_t>(k)));
    return PageAssignment(std::move(pages), k);
}

inline BookDrawing random_drawing(const Graph& g, int k, Rng& rng) {
    return BookDrawing(g, VertexOrder(random_permutation(g.n(), rng)), random_pa(g.m(), k, rng));
}

/// Minimum crossings over all k^m page assignments for a fixed order.
inline std::int64_t brute_force_pa(const Graph& g, const VertexOrder& vo, int k) {
    const int m = g.m();
    std::vector<Page> pages(static_cast<std::size_t>(m), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    while (true) {
        best = std::min(best, count_crossings_reference(g, vo, PageAssignment(pages, k)));
        int i = 0;
        while (i < m && ++pages[static_cast<std::size_t>(i)] == k) pages[static_cast<std::size_t>(i++)] = 0;
        if (i == m) break;
    }
    return best;
}

/// Minimum crossings over every order and every page assignment.
inline std::int64_t brute_force_bcn(const Graph& g, int k) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        best = std::min(best, brute_force_pa(g, VertexOrder(order), k));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace testutil
