#include "bookdraw/combined.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bookdraw/crossings.hpp"
#include "bookdraw/rng.hpp"
#include "bookdraw/vo.hpp"

namespace bookdraw {

BookDrawing con_greedy_plus(const Graph& g, int k, std::uint64_t seed, const PlacementHook& hook) {
    if (k < 1) throw std::invalid_argument("conGreedy+: k must be >= 1");
    Rng rng(seed);
    ConnectivitySelector select(g, rng);
    PageAssignment pa(g.m(), k);
    std::vector<Vertex> spine;
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<EdgeId>> committed(static_cast<std::size_t>(k));

    struct NewEdge {
        EdgeId id;
        Vertex other;
        int anchor;
    };
    std::vector<NewEdge> closing;
    std::vector<std::vector<std::int64_t>> page_cost;  // [edge*k + page][slot]
    std::vector<std::int64_t> slot_cost;
    SlotCosts acc;

    while (!select.done()) {
        const Vertex v = select.select();
        const int len = static_cast<int>(spine.size());

        closing.clear();
        for (const auto& inc : g.incident(v))
            if (select.placed(inc.neighbor))
                closing.push_back({inc.edge, inc.neighbor, pos[static_cast<std::size_t>(inc.neighbor)]});
        std::sort(closing.begin(), closing.end(), [](const NewEdge& a, const NewEdge& b) { return a.anchor < b.anchor; });

        page_cost.assign(closing.size() * static_cast<std::size_t>(k), {});
        for (std::size_t i = 0; i < closing.size(); ++i) {
            for (int p = 0; p < k; ++p) {
                acc.reset(len);
                for (EdgeId f : committed[static_cast<std::size_t>(p)]) {
                    const Edge& other = g.edge(f);
                    if (other.has(closing[i].other)) continue;
                    acc.add_pair(closing[i].anchor, pos[static_cast<std::size_t>(other.u)],
                                 pos[static_cast<std::size_t>(other.v)]);
                }
                page_cost[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(p)] = acc.costs();
            }
        }

        slot_cost.assign(static_cast<std::size_t>(len) + 1, 0);
        for (std::size_t i = 0; i < closing.size(); ++i)
            for (int s = 0; s <= len; ++s) {
                std::int64_t best = std::numeric_limits<std::int64_t>::max();
                for (int p = 0; p < k; ++p)
                    best = std::min(best, page_cost[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(p)]
                                                   [static_cast<std::size_t>(s)]);
                slot_cost[static_cast<std::size_t>(s)] += best;
            }
        const auto chosen = static_cast<int>(std::min_element(slot_cost.begin(), slot_cost.end()) - slot_cost.begin());
        if (hook) hook(PlacementStep{v, slot_cost, chosen});

        for (std::size_t i = 0; i < closing.size(); ++i) {
            Page best_page = 0;
            for (int p = 1; p < k; ++p)
                if (page_cost[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(p)][static_cast<std::size_t>(chosen)] <
                    page_cost[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(best_page)][static_cast<std::size_t>(chosen)])
                    best_page = p;
            pa.assign(closing[i].id, best_page);
            committed[static_cast<std::size_t>(best_page)].push_back(closing[i].id);
        }

        spine.insert(spine.begin() + chosen, v);
        for (int p = chosen; p <= len; ++p) pos[static_cast<std::size_t>(spine[static_cast<std::size_t>(p)])] = p;
        select.place(v);
    }
    return BookDrawing(g, VertexOrder(std::move(spine)), std::move(pa));
}

VertexOrder vo_con_greedy_plus(const Graph& g, int k, std::uint64_t seed) {
    return con_greedy_plus(g, k, seed).vo();
}

VertexOrder compute_vo(const Graph& g, VoHeuristic h, int k, std::uint64_t seed) {
    switch (h) {
    case VoHeuristic::SmlDgrDfs: return vo_smldgr_dfs(g, seed);
    case VoHeuristic::RandDfs: return vo_rand_dfs(g, seed);
    case VoHeuristic::TreeBfs: return vo_tree_bfs(g, seed);
    case VoHeuristic::ConCro: return vo_con_cro(g, seed);
    case VoHeuristic::ConGreedy: return vo_con_greedy(g, seed);
    case VoHeuristic::ConGreedyPlus: return vo_con_greedy_plus(g, k, seed);
    }
    throw std::invalid_argument("unknown VO heuristic");
}

}  // namespace bookdraw
