#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bookdraw/graph.hpp"
#include "bookdraw/rng.hpp"

namespace bookdraw {

enum class VoHeuristic { SmlDgrDfs, RandDfs, TreeBfs, ConCro, ConGreedy, ConGreedyPlus };

std::string_view vo_name(VoHeuristic h) noexcept;
std::optional<VoHeuristic> parse_vo(std::string_view name) noexcept;
/// All VO heuristics in their canonical order.
std::vector<VoHeuristic> all_vo_heuristics();

/// DFS from a minimum-degree vertex, always descending to the smallest-degree unvisited neighbor.
VertexOrder vo_smldgr_dfs(const Graph& g, std::uint64_t seed);

/// DFS from a random vertex through random unvisited neighbors.
VertexOrder vo_rand_dfs(const Graph& g, std::uint64_t seed);

/// Preorder of a BFS spanning forest (children in discovery order) from random roots.
VertexOrder vo_tree_bfs(const Graph& g, std::uint64_t seed);

/// Connectivity selection, placed at whichever spine end crosses fewer open edges.
VertexOrder vo_con_cro(const Graph& g, std::uint64_t seed);

/// Connectivity selection, placed in the gap that adds the fewest 1-page crossings among closed edges.
VertexOrder vo_con_greedy(const Graph& g, std::uint64_t seed);

/**
 * @brief Vertex selection shared by the connectivity-based heuristics.
 *
 * Picks the unplaced vertex with the most placed neighbors, then the fewest
 * unplaced neighbors, then uniformly at random.
 */
class ConnectivitySelector {
public:
    ConnectivitySelector(const Graph& g, Rng& rng);

    bool done() const noexcept { return remaining_ == 0; }
    Vertex select();
    void place(Vertex v);

    bool placed(Vertex v) const { return placed_[static_cast<std::size_t>(v)] != 0; }
    int placed_neighbors(Vertex v) const { return placed_nb_[static_cast<std::size_t>(v)]; }
    int unplaced_neighbors(Vertex v) const { return unplaced_nb_[static_cast<std::size_t>(v)]; }

private:
    const Graph& g_;
    Rng& rng_;
    std::vector<char> placed_;
    std::vector<int> placed_nb_;
    std::vector<int> unplaced_nb_;
    int remaining_;
};

}  // namespace bookdraw
