#include "bookdraw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bookdraw/crossings.hpp"

namespace bookdraw {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::uint64_t Graph::key(Vertex u, Vertex v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("graph: vertex id out of range in edge {" + std::to_string(u) +
                                    "," + std::to_string(v) + "}");
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (!edge_keys_.insert(key(u, v)).second)
        throw std::invalid_argument("graph: duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.emplace_back(u, v);
    adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
    return id;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return u != v && edge_keys_.contains(key(u, v));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(incident(v).size());
    for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
    return out;
}

bool Graph::check_invariants() const {
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : edges_) {
        if (e.u == e.v || e.u < 0 || e.v >= n() || e.u > e.v) return false;
        if (!seen.insert(key(e.u, e.v)).second) return false;
    }
    if (seen.size() != edge_keys_.size()) return false;
    std::vector<int> hits(edges_.size(), 0);
    for (Vertex v = 0; v < n(); ++v) {
        for (const auto& inc : incident(v)) {
            if (inc.edge < 0 || inc.edge >= m()) return false;
            const Edge& e = edge(inc.edge);
            if (!e.has(v) || e.other(v) != inc.neighbor) return false;
            ++hits[static_cast<std::size_t>(inc.edge)];
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 2; });
}

VertexOrder::VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {
    position_.assign(order_.size(), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) {
        const Vertex v = order_[p];
        if (v < 0 || static_cast<std::size_t>(v) >= order_.size() ||
            position_[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("vertex order: not a permutation");
        position_[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
}

VertexOrder VertexOrder::identity(int n) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return VertexOrder(std::move(order));
}

void VertexOrder::move(Vertex v, int new_pos) {
    const int old_pos = position(v);
    if (new_pos < 0 || new_pos >= size()) throw std::out_of_range("vertex order: bad position");
    if (old_pos < new_pos) {
        for (int p = old_pos; p < new_pos; ++p) {
            order_[static_cast<std::size_t>(p)] = order_[static_cast<std::size_t>(p + 1)];
            position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
        }
    } else {
        for (int p = old_pos; p > new_pos; --p) {
            order_[static_cast<std::size_t>(p)] = order_[static_cast<std::size_t>(p - 1)];
            position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
        }
    }
    order_[static_cast<std::size_t>(new_pos)] = v;
    position_[static_cast<std::size_t>(v)] = new_pos;
}

void VertexOrder::swap_adjacent(int pos) {
    const auto p = static_cast<std::size_t>(pos);
    std::swap(order_[p], order_[p + 1]);
    position_[static_cast<std::size_t>(order_[p])] = pos;
    position_[static_cast<std::size_t>(order_[p + 1])] = pos + 1;
}

VertexOrder VertexOrder::reversed() const {
    return VertexOrder(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

bool VertexOrder::is_permutation() const {
    if (position_.size() != order_.size()) return false;
    for (std::size_t p = 0; p < order_.size(); ++p) {
        const Vertex v = order_[p];
        if (v < 0 || static_cast<std::size_t>(v) >= order_.size()) return false;
        if (position_[static_cast<std::size_t>(v)] != static_cast<int>(p)) return false;
    }
    return true;
}

PageAssignment::PageAssignment(int m, int k)
    : k_(k), page_(static_cast<std::size_t>(m), kUnassigned) {
    if (k < 1) throw std::invalid_argument("page assignment: k must be >= 1");
}

PageAssignment::PageAssignment(std::vector<Page> pages, int k) : k_(k), page_(std::move(pages)) {
    if (k < 1) throw std::invalid_argument("page assignment: k must be >= 1");
    for (Page p : page_)
        if (p != kUnassigned && (p < 0 || p >= k))
            throw std::invalid_argument("page assignment: page out of range");
}

PageAssignment PageAssignment::single_page(int m, int k) {
    return PageAssignment(std::vector<Page>(static_cast<std::size_t>(m), 0), k);
}

void PageAssignment::assign(EdgeId e, Page p) {
    if (p < 0 || p >= k_) throw std::out_of_range("page assignment: page out of range");
    page_[static_cast<std::size_t>(e)] = p;
}

bool PageAssignment::is_complete() const {
    return std::none_of(page_.begin(), page_.end(), [](Page p) { return p == kUnassigned; });
}

BookDrawing::BookDrawing(Graph graph, VertexOrder vo, PageAssignment pa)
    : graph_(std::move(graph)), vo_(std::move(vo)), pa_(std::move(pa)) {
    validate();
}

void BookDrawing::set_vo(VertexOrder vo) {
    vo_ = std::move(vo);
    cached_.reset();
}

void BookDrawing::set_pa(PageAssignment pa) {
    pa_ = std::move(pa);
    cached_.reset();
}

std::int64_t BookDrawing::crossings() const {
    if (!cached_) cached_ = count_crossings(graph_, vo_, pa_);
    return *cached_;
}

void BookDrawing::validate() const {
    if (!graph_.check_invariants()) throw std::invalid_argument("drawing: graph invariants violated");
    if (vo_.size() != graph_.n() || !vo_.is_permutation())
        throw std::invalid_argument("drawing: vertex order does not cover the graph");
    if (pa_.size() != graph_.m()) throw std::invalid_argument("drawing: page assignment size mismatch");
    if (!pa_.is_complete()) throw std::invalid_argument("drawing: unassigned edge");
    if (cached_ && *cached_ != count_crossings(graph_, vo_, pa_))
        throw std::invalid_argument("drawing: stale cached crossing count");
}

}  // namespace bookdraw
