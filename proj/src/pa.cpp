#include "bookdraw/pa.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "bookdraw/crossings.hpp"

namespace bookdraw {

namespace {

struct PaEntry {
    PaHeuristic h;
    std::string_view name;
};

constexpr PaEntry kPaNames[] = {
    {PaHeuristic::CeilFloor, "ceilFloor"}, {PaHeuristic::ELen, "eLen"},   {PaHeuristic::Circular, "circular"},
    {PaHeuristic::EarDecomp, "earDecomp"}, {PaHeuristic::Slope, "slope"}, {PaHeuristic::None, "none"},
};

template <typename Key>
std::vector<EdgeId> edges_by_key_descending(const Graph& g, Key key) {
    std::vector<EdgeId> seq(static_cast<std::size_t>(g.m()));
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
    return seq;
}

Page best_page(const std::vector<std::int64_t>& per_page) {
    return static_cast<Page>(std::min_element(per_page.begin(), per_page.end()) - per_page.begin());
}

}  // namespace

std::string_view pa_name(PaHeuristic h) noexcept {
    for (const auto& e : kPaNames)
        if (e.h == h) return e.name;
    return "unknown";
}

std::optional<PaHeuristic> parse_pa(std::string_view name) noexcept {
    for (const auto& e : kPaNames)
        if (e.name == name) return e.h;
    return std::nullopt;
}

std::vector<PaHeuristic> all_pa_heuristics() {
    return {PaHeuristic::CeilFloor, PaHeuristic::ELen, PaHeuristic::Circular, PaHeuristic::EarDecomp,
            PaHeuristic::Slope};
}

PageAssignment pa_greedy_place(const Graph& g, const VertexOrder& vo, int k, std::span<const EdgeId> sequence) {
    PageAssignment pa(g.m(), k);
    for (EdgeId e : sequence) pa.assign(e, best_page(crossings_of_edge_per_page(g, vo, pa, e)));
    // Edges missing from the sequence still need a page.
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!pa.assigned(e)) pa.assign(e, best_page(crossings_of_edge_per_page(g, vo, pa, e)));
    return pa;
}

std::vector<EdgeId> edge_order_ceil_floor(const Graph& g, const VertexOrder& vo) {
    const int n = g.n();
    return edges_by_key_descending(g, [&](EdgeId e) {
        const int d = std::abs(vo.position(g.edge(e).u) - vo.position(g.edge(e).v));
        return std::min(d, n - d);
    });
}

std::vector<EdgeId> edge_order_elen(const Graph& g, const VertexOrder& vo) {
    return edges_by_key_descending(
        g, [&](EdgeId e) { return std::abs(vo.position(g.edge(e).u) - vo.position(g.edge(e).v)); });
}

std::vector<EdgeId> edge_order_circular(const Graph& g, const VertexOrder& vo) {
    const int n = g.n();
    std::unordered_map<std::uint64_t, EdgeId> by_pair;
    by_pair.reserve(static_cast<std::size_t>(g.m()) * 2);
    auto key = [](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    for (EdgeId e = 0; e < g.m(); ++e) by_pair.emplace(key(g.edge(e).u, g.edge(e).v), e);

    std::vector<char> queued(static_cast<std::size_t>(g.m()), 0);
    std::vector<EdgeId> seq;
    seq.reserve(static_cast<std::size_t>(g.m()));
    auto wrap = [n](int p) { return ((p % n) + n) % n; };

    // P_i starts at position i and zig-zags i+1, i-1, i+2, i-2, ... covering all n positions.
    const int paths = (n + 1) / 2;
    std::vector<int> path;
    for (int i = 0; i < paths; ++i) {
        path.clear();
        path.push_back(i);
        for (int step = 1; static_cast<int>(path.size()) < n; ++step) {
            path.push_back(wrap(i + step));
            if (static_cast<int>(path.size()) < n) path.push_back(wrap(i - step));
        }
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            const auto it = by_pair.find(key(vo.at(path[t]), vo.at(path[t + 1])));
            if (it == by_pair.end() || queued[static_cast<std::size_t>(it->second)]) continue;
            queued[static_cast<std::size_t>(it->second)] = 1;
            seq.push_back(it->second);
        }
    }
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!queued[static_cast<std::size_t>(e)]) seq.push_back(e);
    return seq;
}

PageAssignment pa_ceil_floor(const Graph& g, const VertexOrder& vo, int k) {
    return pa_greedy_place(g, vo, k, edge_order_ceil_floor(g, vo));
}

PageAssignment pa_elen(const Graph& g, const VertexOrder& vo, int k) {
    return pa_greedy_place(g, vo, k, edge_order_elen(g, vo));
}

PageAssignment pa_circular(const Graph& g, const VertexOrder& vo, int k) {
    return pa_greedy_place(g, vo, k, edge_order_circular(g, vo));
}

ConflictGraph::ConflictGraph(const Graph& g, const VertexOrder& vo) : adjacency_(static_cast<std::size_t>(g.m())) {
    for (EdgeId e = 0; e < g.m(); ++e)
        for (EdgeId f = e + 1; f < g.m(); ++f)
            if (edges_cross(g.edge(e), g.edge(f), vo)) {
                adjacency_[static_cast<std::size_t>(e)].push_back(f);
                adjacency_[static_cast<std::size_t>(f)].push_back(e);
            }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool ConflictGraph::adjacent(int a, int b) const {
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::size_t ConflictGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adjacency_) twice += list.size();
    return twice / 2;
}

std::vector<std::vector<int>> ear_chains(const ConflictGraph& cg) {
    const int n = cg.size();
    std::vector<int> pre(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> preorder;
    preorder.reserve(static_cast<std::size_t>(n));

    // Iterative DFS, roots and neighbors in index order.
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (pre[static_cast<std::size_t>(root)] != -1) continue;
        pre[static_cast<std::size_t>(root)] = static_cast<int>(preorder.size());
        preorder.push_back(root);
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            const auto nbrs = cg.neighbors(u);
            if (next == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            const int w = nbrs[next++];
            if (pre[static_cast<std::size_t>(w)] != -1) continue;
            pre[static_cast<std::size_t>(w)] = static_cast<int>(preorder.size());
            parent[static_cast<std::size_t>(w)] = u;
            preorder.push_back(w);
            stack.emplace_back(w, 0);
        }
    }

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> chains;
    for (int v : preorder) {
        covered[static_cast<std::size_t>(v)] = 1;
        for (int w : cg.neighbors(v)) {
            // Back edge from v down to its descendant w.
            if (pre[static_cast<std::size_t>(w)] <= pre[static_cast<std::size_t>(v)] ||
                parent[static_cast<std::size_t>(w)] == v)
                continue;
            std::vector<int> chain{v};
            int x = w;
            while (!covered[static_cast<std::size_t>(x)]) {
                covered[static_cast<std::size_t>(x)] = 1;
                chain.push_back(x);
                x = parent[static_cast<std::size_t>(x)];
            }
            chain.push_back(x);
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

PageAssignment pa_ear_decomp(const Graph& g, const VertexOrder& vo, int k) {
    PageAssignment pa(g.m(), k);
    const ConflictGraph cg(g, vo);
    for (const auto& chain : ear_chains(cg)) {
        if (!pa.assigned(chain.front())) pa.assign(chain.front(), 0);
        Page prev = pa.page(chain.front());
        for (std::size_t t = 1; t < chain.size(); ++t) {
            const int node = chain[t];
            if (!pa.assigned(node)) pa.assign(node, (prev + 1) % k);
            prev = pa.page(node);
        }
    }
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!pa.assigned(e)) pa.assign(e, best_page(crossings_of_edge_per_page(g, vo, pa, e)));
    return pa;
}

int slope_class(const Edge& e, const VertexOrder& vo) {
    return (vo.position(e.u) + vo.position(e.v)) % vo.size();
}

PageAssignment pa_slope(const Graph& g, const VertexOrder& vo, int k) {
    PageAssignment pa(g.m(), k);
    const auto n = static_cast<std::int64_t>(g.n());
    for (EdgeId e = 0; e < g.m(); ++e) {
        const std::int64_t s = slope_class(g.edge(e), vo);
        pa.assign(e, static_cast<Page>(s * k / n));
    }
    return pa;
}

PageAssignment compute_pa(const Graph& g, const VertexOrder& vo, int k, PaHeuristic h) {
    switch (h) {
    case PaHeuristic::CeilFloor: return pa_ceil_floor(g, vo, k);
    case PaHeuristic::ELen: return pa_elen(g, vo, k);
    case PaHeuristic::Circular: return pa_circular(g, vo, k);
    case PaHeuristic::EarDecomp: return pa_ear_decomp(g, vo, k);
    case PaHeuristic::Slope: return pa_slope(g, vo, k);
    case PaHeuristic::None: return PageAssignment::single_page(g.m(), k);
    }
    throw std::invalid_argument("unknown PA heuristic");
}

}  // namespace bookdraw
