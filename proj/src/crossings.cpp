#include "bookdraw/crossings.hpp"

#include <algorithm>

namespace bookdraw {

namespace {

class Fenwick {
public:
    explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

    void add(int i, int delta) {
        for (auto x = static_cast<std::size_t>(i) + 1; x < tree_.size(); x += x & (~x + 1)) tree_[x] += delta;
    }
    /// Sum over [0, i].
    std::int64_t prefix(int i) const {
        std::int64_t s = 0;
        for (auto x = static_cast<std::size_t>(i + 1); x > 0; x -= x & (~x + 1)) s += tree_[x];
        return s;
    }

private:
    std::vector<std::int64_t> tree_;
};

struct Chord {
    int lo;
    int hi;
};

}  // namespace

bool edges_cross(const Edge& e1, const Edge& e2, const VertexOrder& vo) {
    if (e1.shares_endpoint(e2)) return false;
    return chords_alternate(vo.position(e1.u), vo.position(e1.v), vo.position(e2.u), vo.position(e2.v));
}

std::int64_t count_crossings(const Graph& g, const VertexOrder& vo, const PageAssignment& pa) {
    std::vector<std::vector<Chord>> by_page(static_cast<std::size_t>(pa.k()));
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Page p = pa.page(e);
        if (p == PageAssignment::kUnassigned) continue;
        int a = vo.position(g.edge(e).u);
        int b = vo.position(g.edge(e).v);
        if (a > b) std::swap(a, b);
        by_page[static_cast<std::size_t>(p)].push_back({a, b});
    }

    // Chords (a, b) and (c, d) with a < c cross iff a < c < b < d. Sweep by
    // left endpoint; chords sharing a left endpoint are queried before any of
    // them is inserted so that they never count against each other.
    std::int64_t total = 0;
    Fenwick open(g.n());
    for (auto& chords : by_page) {
        std::sort(chords.begin(), chords.end(),
                  [](const Chord& x, const Chord& y) { return x.lo < y.lo; });
        std::size_t i = 0;
        while (i < chords.size()) {
            std::size_t j = i;
            while (j < chords.size() && chords[j].lo == chords[i].lo) ++j;
            for (std::size_t t = i; t < j; ++t)
                total += open.prefix(chords[t].hi - 1) - open.prefix(chords[t].lo);
            for (std::size_t t = i; t < j; ++t) open.add(chords[t].hi, 1);
            i = j;
        }
        for (const Chord& c : chords) open.add(c.hi, -1);
    }
    return total;
}

std::int64_t count_crossings(const BookDrawing& d) {
    return count_crossings(d.graph(), d.vo(), d.pa());
}

std::int64_t count_crossings_reference(const Graph& g, const VertexOrder& vo, const PageAssignment& pa) {
    std::int64_t total = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!pa.assigned(e)) continue;
        for (EdgeId f = e + 1; f < g.m(); ++f) {
            if (pa.page(f) != pa.page(e)) continue;
            if (edges_cross(g.edge(e), g.edge(f), vo)) ++total;
        }
    }
    return total;
}

std::int64_t count_crossings_reference(const BookDrawing& d) {
    return count_crossings_reference(d.graph(), d.vo(), d.pa());
}

std::int64_t crossings_of_edge(const Graph& g, const VertexOrder& vo, const PageAssignment& pa,
                               EdgeId e, Page page) {
    const Edge& edge = g.edge(e);
    std::int64_t count = 0;
    for (EdgeId f = 0; f < g.m(); ++f) {
        if (f == e || pa.page(f) != page) continue;
        if (edges_cross(edge, g.edge(f), vo)) ++count;
    }
    return count;
}

std::int64_t crossings_of_edge(const BookDrawing& d, EdgeId e, Page page) {
    return crossings_of_edge(d.graph(), d.vo(), d.pa(), e, page);
}

std::vector<std::int64_t> crossings_of_edge_per_page(const Graph& g, const VertexOrder& vo,
                                                     const PageAssignment& pa, EdgeId e) {
    std::vector<std::int64_t> per_page(static_cast<std::size_t>(pa.k()), 0);
    const Edge& edge = g.edge(e);
    const int a = vo.position(edge.u);
    const int b = vo.position(edge.v);
    for (EdgeId f = 0; f < g.m(); ++f) {
        const Page p = pa.page(f);
        if (f == e || p == PageAssignment::kUnassigned) continue;
        const Edge& other = g.edge(f);
        if (edge.shares_endpoint(other)) continue;
        if (chords_alternate(a, b, vo.position(other.u), vo.position(other.v)))
            ++per_page[static_cast<std::size_t>(p)];
    }
    return per_page;
}

void SlotCosts::reset(int length) {
    diff_.assign(static_cast<std::size_t>(length) + 2, 0);
}

std::vector<std::int64_t> SlotCosts::costs() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(slots()), 0);
    accumulate_into(out);
    return out;
}

void SlotCosts::accumulate_into(std::span<std::int64_t> out) const {
    std::int64_t running = 0;
    for (std::size_t s = 0; s < out.size(); ++s) {
        running += diff_[s];
        out[s] += running;
    }
}

std::vector<int> reduced_positions(const VertexOrder& vo, Vertex v) {
    const int pv = vo.position(v);
    std::vector<int> q(vo.positions().begin(), vo.positions().end());
    for (int& p : q)
        if (p > pv) --p;
    q[static_cast<std::size_t>(v)] = -1;
    return q;
}

std::vector<std::int64_t> vertex_position_costs(const Graph& g, const VertexOrder& vo,
                                                const PageAssignment& pa, Vertex v) {
    const int n = g.n();
    const auto q = reduced_positions(vo, v);
    SlotCosts acc(n - 1);
    for (const auto& inc : g.incident(v)) {
        const Page p = pa.page(inc.edge);
        if (p == PageAssignment::kUnassigned) continue;
        const int anchor = q[static_cast<std::size_t>(inc.neighbor)];
        for (EdgeId f = 0; f < g.m(); ++f) {
            if (pa.page(f) != p) continue;
            const Edge& other = g.edge(f);
            if (other.has(v) || other.has(inc.neighbor)) continue;
            acc.add_pair(anchor, q[static_cast<std::size_t>(other.u)], q[static_cast<std::size_t>(other.v)]);
        }
    }
    return acc.costs();
}

std::vector<std::vector<std::vector<std::int64_t>>> vertex_edge_page_costs(
    const Graph& g, const VertexOrder& vo, const PageAssignment& pa, Vertex v) {
    const int n = g.n();
    const int k = pa.k();
    const auto q = reduced_positions(vo, v);

    std::vector<std::vector<EdgeId>> obstacles(static_cast<std::size_t>(k));
    for (EdgeId f = 0; f < g.m(); ++f) {
        const Page p = pa.page(f);
        if (p == PageAssignment::kUnassigned || g.edge(f).has(v)) continue;
        obstacles[static_cast<std::size_t>(p)].push_back(f);
    }

    std::vector<std::vector<std::vector<std::int64_t>>> out;
    out.reserve(g.incident(v).size());
    SlotCosts acc;
    for (const auto& inc : g.incident(v)) {
        const int anchor = q[static_cast<std::size_t>(inc.neighbor)];
        auto& per_page = out.emplace_back(static_cast<std::size_t>(k));
        for (int p = 0; p < k; ++p) {
            acc.reset(n - 1);
            for (EdgeId f : obstacles[static_cast<std::size_t>(p)]) {
                const Edge& other = g.edge(f);
                if (other.has(inc.neighbor)) continue;
                acc.add_pair(anchor, q[static_cast<std::size_t>(other.u)], q[static_cast<std::size_t>(other.v)]);
            }
            per_page[static_cast<std::size_t>(p)] = acc.costs();
        }
    }
    return out;
}

std::int64_t vertex_move_delta(const Graph& g, const VertexOrder& vo, const PageAssignment& pa,
                               Vertex v, int new_pos) {
    if (new_pos < 0 || new_pos >= g.n()) throw std::out_of_range("vertex_move_delta: bad position");
    const int cur = vo.position(v);
    if (new_pos == cur) return 0;
    const auto costs = vertex_position_costs(g, vo, pa, v);
    return costs[static_cast<std::size_t>(new_pos)] - costs[static_cast<std::size_t>(cur)];
}

std::int64_t vertex_move_delta(const BookDrawing& d, Vertex v, int new_pos) {
    return vertex_move_delta(d.graph(), d.vo(), d.pa(), v, new_pos);
}

}  // namespace bookdraw
