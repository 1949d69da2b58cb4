#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bookdraw/graph.hpp"

namespace bookdraw {

/// True iff positions a-b and c-d interleave (exactly one of c, d strictly inside a..b).
/// Positions must be pairwise distinct; the chords' orientation is irrelevant.
constexpr bool chords_alternate(int a, int b, int c, int d) noexcept {
    if (a > b) std::swap(a, b);
    const bool c_in = a < c && c < b;
    const bool d_in = a < d && d < b;
    return c_in != d_in;
}

/**
 * @brief Whether two edges cross when drawn on the same page.
 *
 * Edges that share an endpoint never cross; that case returns false.
 */
bool edges_cross(const Edge& e1, const Edge& e2, const VertexOrder& vo);

/// Total number of same-page alternating edge pairs. O(m log n) per page
/// by counting interleaved intervals with a Fenwick tree. Unassigned edges are ignored.
std::int64_t count_crossings(const Graph& g, const VertexOrder& vo, const PageAssignment& pa);
std::int64_t count_crossings(const BookDrawing& d);

/// Quadratic double loop over edge pairs. Exists to check count_crossings.
std::int64_t count_crossings_reference(const Graph& g, const VertexOrder& vo, const PageAssignment& pa);
std::int64_t count_crossings_reference(const BookDrawing& d);

/// Number of assigned edges on `page` (other than e) that cross e.
std::int64_t crossings_of_edge(const Graph& g, const VertexOrder& vo, const PageAssignment& pa,
                               EdgeId e, Page page);
std::int64_t crossings_of_edge(const BookDrawing& d, EdgeId e, Page page);

/// Crossings of e against the assigned edges of every page, indexed by page.
std::vector<std::int64_t> crossings_of_edge_per_page(const Graph& g, const VertexOrder& vo,
                                                     const PageAssignment& pa, EdgeId e);

/**
 * @brief Crossing count of a new vertex's edges for every gap of a spine.
 *
 * A spine holds `length` vertices at positions 0..length-1; slot s puts a new
 * vertex v immediately before position s (slot `length` is the right end).
 * add_pair records one edge v-u (u at position `anchor`) against an existing
 * chord lo-hi; the chord crosses v-u exactly for the slots where v and u are
 * separated by it. Costs are accumulated with a difference array, so each pair
 * is O(1) and reading all slots is O(length).
 */
class SlotCosts {
public:
    SlotCosts() = default;
    explicit SlotCosts(int length) { reset(length); }

    void reset(int length);
    int slots() const noexcept { return static_cast<int>(diff_.size()) - 1; }

    /// lo, hi, anchor are distinct spine positions.
    void add_pair(int anchor, int lo, int hi, std::int64_t weight = 1) noexcept {
        if (lo > hi) std::swap(lo, hi);
        const auto l1 = static_cast<std::size_t>(lo + 1);
        const auto h1 = static_cast<std::size_t>(hi + 1);
        if (lo < anchor && anchor < hi) {
            diff_[0] += weight;
            diff_[l1] -= weight;
            diff_[h1] += weight;
        } else {
            diff_[l1] += weight;
            diff_[h1] -= weight;
        }
    }

    /// Cost per slot, 0..length.
    std::vector<std::int64_t> costs() const;
    void accumulate_into(std::span<std::int64_t> out) const;

private:
    std::vector<std::int64_t> diff_;
};

/**
 * Positions of all vertices other than v once v is lifted off the spine.
 * Slot s of the reduced spine corresponds to v ending at position s.
 */
std::vector<int> reduced_positions(const VertexOrder& vo, Vertex v);

/// Crossings of v's edges (pages fixed) for every target position of v.
std::vector<std::int64_t> vertex_position_costs(const Graph& g, const VertexOrder& vo,
                                                const PageAssignment& pa, Vertex v);

/**
 * For each edge incident to v (in incidence order) and each page, the
 * crossings that edge would have on that page for every target position of v.
 * Only edges not incident to v count as obstacles. Layout: [edge][page][slot].
 */
std::vector<std::vector<std::vector<std::int64_t>>> vertex_edge_page_costs(
    const Graph& g, const VertexOrder& vo, const PageAssignment& pa, Vertex v);

/// Change in total crossings when v is moved to new_pos with pages unchanged.
std::int64_t vertex_move_delta(const Graph& g, const VertexOrder& vo, const PageAssignment& pa,
                               Vertex v, int new_pos);
std::int64_t vertex_move_delta(const BookDrawing& d, Vertex v, int new_pos);

}  // namespace bookdraw
