#include "bookdraw/vo.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "bookdraw/crossings.hpp"

namespace bookdraw {

namespace {

struct VoEntry {
    VoHeuristic h;
    std::string_view name;
};

constexpr VoEntry kVoNames[] = {
    {VoHeuristic::SmlDgrDfs, "smlDgrDFS"}, {VoHeuristic::RandDfs, "randDFS"},
    {VoHeuristic::TreeBfs, "treeBFS"},     {VoHeuristic::ConCro, "conCro"},
    {VoHeuristic::ConGreedy, "conGreedy"}, {VoHeuristic::ConGreedyPlus, "conGreedy+"},
};

/// Shared DFS skeleton. `pick_root` and `pick_next` choose among unvisited vertices.
template <typename PickRoot, typename PickNext>
VertexOrder dfs_order(const Graph& g, PickRoot pick_root, PickNext pick_next) {
    const int n = g.n();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> stack;
    while (static_cast<int>(order.size()) < n) {
        const Vertex root = pick_root(visited);
        visited[static_cast<std::size_t>(root)] = 1;
        order.push_back(root);
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex next = pick_next(stack.back(), visited);
            if (next < 0) {
                stack.pop_back();
                continue;
            }
            visited[static_cast<std::size_t>(next)] = 1;
            order.push_back(next);
            stack.push_back(next);
        }
    }
    return VertexOrder(std::move(order));
}

}  // namespace

std::string_view vo_name(VoHeuristic h) noexcept {
    for (const auto& e : kVoNames)
        if (e.h == h) return e.name;
    return "unknown";
}

std::optional<VoHeuristic> parse_vo(std::string_view name) noexcept {
    for (const auto& e : kVoNames)
        if (e.name == name) return e.h;
    return std::nullopt;
}

std::vector<VoHeuristic> all_vo_heuristics() {
    std::vector<VoHeuristic> out;
    for (const auto& e : kVoNames) out.push_back(e.h);
    return out;
}

VertexOrder vo_smldgr_dfs(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    auto smaller = [](int a, int b) { return a < b; };
    auto pick_root = [&](const std::vector<char>& visited) {
        TieBreaker<int> tie(rng);
        Vertex best = -1;
        for (Vertex v = 0; v < g.n(); ++v)
            if (!visited[static_cast<std::size_t>(v)] && tie.offer(g.degree(v), smaller)) best = v;
        return best;
    };
    auto pick_next = [&](Vertex u, const std::vector<char>& visited) {
        TieBreaker<int> tie(rng);
        Vertex best = -1;
        for (const auto& inc : g.incident(u))
            if (!visited[static_cast<std::size_t>(inc.neighbor)] && tie.offer(g.degree(inc.neighbor), smaller))
                best = inc.neighbor;
        return best;
    };
    return dfs_order(g, pick_root, pick_next);
}

VertexOrder vo_rand_dfs(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vertex> candidates;
    auto pick_root = [&](const std::vector<char>& visited) {
        candidates.clear();
        for (Vertex v = 0; v < g.n(); ++v)
            if (!visited[static_cast<std::size_t>(v)]) candidates.push_back(v);
        return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    };
    auto pick_next = [&](Vertex u, const std::vector<char>& visited) -> Vertex {
        candidates.clear();
        for (const auto& inc : g.incident(u))
            if (!visited[static_cast<std::size_t>(inc.neighbor)]) candidates.push_back(inc.neighbor);
        if (candidates.empty()) return -1;
        return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    };
    return dfs_order(g, pick_root, pick_next);
}

VertexOrder vo_tree_bfs(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    const int n = g.n();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> unvisited;
    std::deque<Vertex> queue;
    std::vector<Vertex> stack;

    int seen = 0;
    while (seen < n) {
        unvisited.clear();
        for (Vertex v = 0; v < n; ++v)
            if (!visited[static_cast<std::size_t>(v)]) unvisited.push_back(v);
        const Vertex root = unvisited[static_cast<std::size_t>(rng.below(unvisited.size()))];

        visited[static_cast<std::size_t>(root)] = 1;
        ++seen;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(u)) {
                const auto w = static_cast<std::size_t>(inc.neighbor);
                if (visited[w]) continue;
                visited[w] = 1;
                ++seen;
                children[static_cast<std::size_t>(u)].push_back(inc.neighbor);
                queue.push_back(inc.neighbor);
            }
        }

        // Preorder of the BFS tree: a crossing-free 1-page layout of it.
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            order.push_back(u);
            const auto& kids = children[static_cast<std::size_t>(u)];
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
        }
    }
    return VertexOrder(std::move(order));
}

ConnectivitySelector::ConnectivitySelector(const Graph& g, Rng& rng)
    : g_(g),
      rng_(rng),
      placed_(static_cast<std::size_t>(g.n()), 0),
      placed_nb_(static_cast<std::size_t>(g.n()), 0),
      unplaced_nb_(static_cast<std::size_t>(g.n()), 0),
      remaining_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) unplaced_nb_[static_cast<std::size_t>(v)] = g.degree(v);
}

Vertex ConnectivitySelector::select() {
    struct Key {
        int placed = 0;
        int unplaced = 0;
    };
    auto better = [](const Key& a, const Key& b) {
        return a.placed > b.placed || (a.placed == b.placed && a.unplaced < b.unplaced);
    };
    TieBreaker<Key> tie(rng_);
    Vertex best = -1;
    for (Vertex v = 0; v < g_.n(); ++v) {
        if (placed(v)) continue;
        if (tie.offer(Key{placed_neighbors(v), unplaced_neighbors(v)}, better)) best = v;
    }
    return best;
}

void ConnectivitySelector::place(Vertex v) {
    placed_[static_cast<std::size_t>(v)] = 1;
    --remaining_;
    for (const auto& inc : g_.incident(v)) {
        ++placed_nb_[static_cast<std::size_t>(inc.neighbor)];
        --unplaced_nb_[static_cast<std::size_t>(inc.neighbor)];
    }
}

VertexOrder vo_con_cro(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    ConnectivitySelector select(g, rng);
    std::deque<Vertex> spine;
    std::vector<int> coord(static_cast<std::size_t>(g.n()), 0);  // order-preserving, may be negative
    std::vector<char> adjacent_to_new(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::int64_t> open_after;  // open edges at spine index > i

    while (!select.done()) {
        const Vertex v = select.select();
        std::int64_t cost_left = 0;
        std::int64_t cost_right = 0;
        if (!spine.empty()) {
            for (const auto& inc : g.incident(v)) adjacent_to_new[static_cast<std::size_t>(inc.neighbor)] = 1;

            // Open edges leaving each placed x, excluding the ones v is about to close.
            const std::size_t len = spine.size();
            open_after.assign(len + 1, 0);
            for (std::size_t i = len; i-- > 0;) {
                const Vertex x = spine[i];
                const int open = select.unplaced_neighbors(x) - adjacent_to_new[static_cast<std::size_t>(x)];
                open_after[i] = open_after[i + 1] + open;
            }
            const std::int64_t total_open = open_after[0];
            const int base = coord[static_cast<std::size_t>(spine.front())];
            for (const auto& inc : g.incident(v)) {
                if (!select.placed(inc.neighbor)) continue;
                const auto i = static_cast<std::size_t>(coord[static_cast<std::size_t>(inc.neighbor)] - base);
                cost_right += open_after[i + 1];
                cost_left += total_open - open_after[i];
            }
            for (const auto& inc : g.incident(v)) adjacent_to_new[static_cast<std::size_t>(inc.neighbor)] = 0;
        }

        if (spine.empty()) {
            coord[static_cast<std::size_t>(v)] = 0;
            spine.push_back(v);
        } else if (cost_left < cost_right) {
            coord[static_cast<std::size_t>(v)] = coord[static_cast<std::size_t>(spine.front())] - 1;
            spine.push_front(v);
        } else {
            coord[static_cast<std::size_t>(v)] = coord[static_cast<std::size_t>(spine.back())] + 1;
            spine.push_back(v);
        }
        select.place(v);
    }
    return VertexOrder(std::vector<Vertex>(spine.begin(), spine.end()));
}

VertexOrder vo_con_greedy(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    ConnectivitySelector select(g, rng);
    std::vector<Vertex> spine;
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    std::vector<EdgeId> closed;
    SlotCosts acc;

    while (!select.done()) {
        const Vertex v = select.select();
        const int len = static_cast<int>(spine.size());
        acc.reset(len);
        for (const auto& inc : g.incident(v)) {
            if (!select.placed(inc.neighbor)) continue;
            const int anchor = pos[static_cast<std::size_t>(inc.neighbor)];
            for (EdgeId f : closed) {
                const Edge& other = g.edge(f);
                if (other.has(inc.neighbor)) continue;
                acc.add_pair(anchor, pos[static_cast<std::size_t>(other.u)], pos[static_cast<std::size_t>(other.v)]);
            }
        }
        const auto costs = acc.costs();
        const auto best = static_cast<int>(std::min_element(costs.begin(), costs.end()) - costs.begin());

        spine.insert(spine.begin() + best, v);
        for (int p = best; p <= len; ++p) pos[static_cast<std::size_t>(spine[static_cast<std::size_t>(p)])] = p;
        for (const auto& inc : g.incident(v))
            if (select.placed(inc.neighbor)) closed.push_back(inc.edge);
        select.place(v);
    }
    return VertexOrder(std::move(spine));
}

}  // namespace bookdraw
