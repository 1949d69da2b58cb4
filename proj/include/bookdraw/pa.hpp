#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bookdraw/graph.hpp"

namespace bookdraw {

enum class PaHeuristic { CeilFloor, ELen, Circular, EarDecomp, Slope, None };

std::string_view pa_name(PaHeuristic h) noexcept;
std::optional<PaHeuristic> parse_pa(std::string_view name) noexcept;
/// The five real PA heuristics (without None).
std::vector<PaHeuristic> all_pa_heuristics();

/// Places edges in `sequence` order, each on the page where it currently crosses
/// the fewest assigned edges (lowest page on ties).
PageAssignment pa_greedy_place(const Graph& g, const VertexOrder& vo, int k, std::span<const EdgeId> sequence);

/// Cyclic chord length min(|pu-pv|, n-|pu-pv|), longest first; ties by edge index.
std::vector<EdgeId> edge_order_ceil_floor(const Graph& g, const VertexOrder& vo);
/// Spine distance |pu-pv|, longest first; ties by edge index.
std::vector<EdgeId> edge_order_elen(const Graph& g, const VertexOrder& vo);
/// Edges in the order the zig-zag paths P_1..P_ceil(n/2) over spine positions visit them.
std::vector<EdgeId> edge_order_circular(const Graph& g, const VertexOrder& vo);

PageAssignment pa_ceil_floor(const Graph& g, const VertexOrder& vo, int k);
PageAssignment pa_elen(const Graph& g, const VertexOrder& vo, int k);
PageAssignment pa_circular(const Graph& g, const VertexOrder& vo, int k);
PageAssignment pa_ear_decomp(const Graph& g, const VertexOrder& vo, int k);
PageAssignment pa_slope(const Graph& g, const VertexOrder& vo, int k);

/// Dispatch. PaHeuristic::None puts every edge on page 0.
PageAssignment compute_pa(const Graph& g, const VertexOrder& vo, int k, PaHeuristic h);

/**
 * @brief Edge intersection graph of the circular drawing for a spine order.
 *
 * One node per edge of the input graph; two nodes are adjacent iff the
 * edges' endpoints alternate around the circle.
 */
class ConflictGraph {
public:
    ConflictGraph(const Graph& g, const VertexOrder& vo);

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::span<const int> neighbors(int node) const { return adjacency_[static_cast<std::size_t>(node)]; }
    bool adjacent(int a, int b) const;
    std::size_t edge_count() const;

private:
    std::vector<std::vector<int>> adjacency_;
};

/**
 * Chain decomposition of a graph given by adjacency lists. Each chain is a
 * node sequence: the first chain of every 2-edge-connected block is a cycle
 * (first node repeated at the end), later chains are ears whose two ends are
 * already covered. Bridges and nodes outside any cycle appear in no chain.
 */
std::vector<std::vector<int>> ear_chains(const ConflictGraph& cg);

/// Slope class (pu + pv) mod n of an edge in the circular drawing.
int slope_class(const Edge& e, const VertexOrder& vo);

}  // namespace bookdraw
