#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace bookdraw {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Page = std::int32_t;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
    bool has(Vertex w) const noexcept { return w == u || w == v; }
    bool shares_endpoint(const Edge& e) const noexcept { return has(e.u) || has(e.v); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/**
 * @brief Simple undirected graph on vertices 0..n-1.
 *
 * Edges keep the index they were inserted with; page assignments and every
 * per-edge table in the library are indexed by it.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    /// Throws std::invalid_argument on self-loops, duplicates or bad ids.
    EdgeId add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const;

    int n() const noexcept { return static_cast<int>(adjacency_.size()); }
    int m() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    std::span<const Incidence> incident(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    std::vector<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    /// Reorders one adjacency list; the edge set is untouched.
    std::vector<Incidence>& mutable_incident(Vertex v) { return adjacency_[static_cast<std::size_t>(v)]; }

    /// Checks simplicity and adjacency/edge-list consistency.
    bool check_invariants() const;

private:
    static std::uint64_t key(Vertex u, Vertex v) noexcept;

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Spine order: order[p] is the vertex at position p, position[v] its inverse.
class VertexOrder {
public:
    VertexOrder() = default;
    explicit VertexOrder(std::vector<Vertex> order);

    static VertexOrder identity(int n);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    Vertex at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
    int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> order() const noexcept { return order_; }
    std::span<const int> positions() const noexcept { return position_; }

    /// Removes v and reinserts it so that it ends up at new_pos.
    void move(Vertex v, int new_pos);
    /// Exchanges the vertices at pos and pos + 1.
    void swap_adjacent(int pos);
    VertexOrder reversed() const;

    bool is_permutation() const;

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.order_ == b.order_; }

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

/// Edge index -> page in [0, k); kUnassigned marks edges not placed yet.
class PageAssignment {
public:
    static constexpr Page kUnassigned = -1;

    PageAssignment() = default;
    PageAssignment(int m, int k);
    PageAssignment(std::vector<Page> pages, int k);

    static PageAssignment single_page(int m, int k = 1);

    int k() const noexcept { return k_; }
    int size() const noexcept { return static_cast<int>(page_.size()); }
    Page page(EdgeId e) const { return page_[static_cast<std::size_t>(e)]; }
    bool assigned(EdgeId e) const { return page(e) != kUnassigned; }
    std::span<const Page> pages() const noexcept { return page_; }

    void assign(EdgeId e, Page p);
    void unassign(EdgeId e) { page_[static_cast<std::size_t>(e)] = kUnassigned; }

    bool is_complete() const;

    friend bool operator==(const PageAssignment&, const PageAssignment&) = default;

private:
    int k_ = 1;
    std::vector<Page> page_;
};

/**
 * @brief A graph together with a spine order and a page assignment.
 *
 * The crossing count is cached lazily. Every mutator drops the cache.
 */
class BookDrawing {
public:
    BookDrawing() = default;
    BookDrawing(Graph graph, VertexOrder vo, PageAssignment pa);

    const Graph& graph() const noexcept { return graph_; }
    const VertexOrder& vo() const noexcept { return vo_; }
    const PageAssignment& pa() const noexcept { return pa_; }
    int k() const noexcept { return pa_.k(); }

    void set_vo(VertexOrder vo);
    void set_pa(PageAssignment pa);

    std::int64_t crossings() const;
    std::optional<std::int64_t> cached_crossings() const noexcept { return cached_; }
    void set_cached_crossings(std::int64_t c) { cached_ = c; }

    /// Throws std::invalid_argument describing the first broken invariant.
    void validate() const;

private:
    Graph graph_;
    VertexOrder vo_;
    PageAssignment pa_;
    mutable std::optional<std::int64_t> cached_;
};

}  // namespace bookdraw
