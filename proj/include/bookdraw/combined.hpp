#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "bookdraw/graph.hpp"
#include "bookdraw/vo.hpp"

namespace bookdraw {

/// One placement decision of conGreedy+, reported to an optional observer.
struct PlacementStep {
    Vertex vertex;
    std::span<const std::int64_t> slot_costs;  // new crossings per gap of the partial spine
    int chosen_slot;
};

using PlacementHook = std::function<void(const PlacementStep&)>;

/**
 * @brief conGreedy+: builds spine order and page assignment together.
 *
 * Vertices are chosen by connectivity (most placed neighbors, then fewest
 * unplaced neighbors, then seeded random). Every gap of the partial spine is
 * tried; in each, the edges the vertex closes are assigned in ascending order
 * of their placed endpoint, each to its least-crossing page. The gap with the
 * fewest new crossings wins, leftmost on ties.
 *
 * The closed edges of one vertex share that vertex and never cross each
 * other, so their page choices are independent and the assignment order
 * cannot change the cost.
 */
BookDrawing con_greedy_plus(const Graph& g, int k, std::uint64_t seed, const PlacementHook& hook = {});

/// The spine order of con_greedy_plus, with its page assignment discarded.
VertexOrder vo_con_greedy_plus(const Graph& g, int k, std::uint64_t seed);

/// Dispatch over every VO heuristic; k only matters for conGreedy+.
VertexOrder compute_vo(const Graph& g, VoHeuristic h, int k, std::uint64_t seed);

}  // namespace bookdraw
