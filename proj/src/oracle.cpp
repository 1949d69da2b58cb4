#include "bookdraw/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "bookdraw/combined.hpp"
#include "bookdraw/crossings.hpp"
#include "bookdraw/pa.hpp"

namespace bookdraw {

namespace {

struct Chord {
    int lo;
    int hi;
};

class OrderSearch {
public:
    OrderSearch(const Graph& g, int k, std::int64_t upper)
        : g_(g), k_(k), n_(g.n()), best_(upper + 1), pos_(static_cast<std::size_t>(n_), -1),
          page_(static_cast<std::size_t>(g.m()), PageAssignment::kUnassigned),
          chords_(static_cast<std::size_t>(k)), closing_(static_cast<std::size_t>(n_)) {}

    void run() {
        if (n_ == 0) {
            best_ = 0;
            found_ = true;
            return;
        }
        place(0, 0);
    }

    bool found() const { return found_; }
    std::int64_t best() const { return best_; }
    const std::vector<Vertex>& best_order() const { return best_order_; }
    const std::vector<Page>& best_pages() const { return best_pages_; }

private:
    void place(int t, int used) {
        if (t == n_) {
            best_ = current_;
            found_ = true;
            best_order_ = order_;
            best_pages_ = page_;
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (pos_[static_cast<std::size_t>(v)] != -1) continue;
            if (t == 0 && v != 0) break;
            if (!mirror_ok(t, v)) continue;

            auto& closing = closing_[static_cast<std::size_t>(t)];
            closing.clear();
            for (const auto& inc : g_.incident(v))
                if (pos_[static_cast<std::size_t>(inc.neighbor)] != -1) closing.push_back(inc.edge);

            pos_[static_cast<std::size_t>(v)] = t;
            order_.push_back(v);
            assign(t, v, 0, used);
            order_.pop_back();
            pos_[static_cast<std::size_t>(v)] = -1;
            if (best_ == 0) return;
        }
    }

    // Mirror images are skipped by requiring order[1] < order[n-1].
    bool mirror_ok(int t, Vertex v) const {
        if (n_ < 3) return true;
        if (t == 1) {
            for (Vertex w = v + 1; w < n_; ++w)
                if (pos_[static_cast<std::size_t>(w)] == -1) return true;
            return false;
        }
        if (t == n_ - 1) return v > order_[1];
        return true;
    }

    void assign(int t, Vertex v, std::size_t i, int used) {
        const auto& closing = closing_[static_cast<std::size_t>(t)];
        if (i == closing.size()) {
            place(t + 1, used);
            return;
        }
        const EdgeId e = closing[i];
        const int anchor = pos_[static_cast<std::size_t>(g_.edge(e).other(v))];
        const int limit = std::min(k_ - 1, used + 1);
        for (int p = 0; p <= limit; ++p) {
            auto& list = chords_[static_cast<std::size_t>(p)];
            // v is rightmost, so (anchor, t) crosses (lo, hi) iff anchor lies strictly inside.
            // Chords ending at t share v and never cross.
            std::int64_t added = 0;
            for (const Chord& c : list)
                if (c.lo < anchor && anchor < c.hi && c.hi != t) ++added;
            if (current_ + added >= best_) continue;
            current_ += added;
            list.push_back({anchor, t});
            page_[static_cast<std::size_t>(e)] = p;
            assign(t, v, i + 1, std::max(used, p));
            page_[static_cast<std::size_t>(e)] = PageAssignment::kUnassigned;
            list.pop_back();
            current_ -= added;
            if (best_ == 0) return;
        }
    }

    const Graph& g_;
    int k_;
    int n_;
    std::int64_t best_;
    std::int64_t current_ = 0;
    bool found_ = false;
    std::vector<int> pos_;
    std::vector<Vertex> order_;
    std::vector<Page> page_;
    std::vector<std::vector<Chord>> chords_;
    std::vector<std::vector<EdgeId>> closing_;
    std::vector<Vertex> best_order_;
    std::vector<Page> best_pages_;
};

class PageSearch {
public:
    PageSearch(const Graph& g, const VertexOrder& vo, int k, std::int64_t upper, PageAssignment incumbent)
        : cg_(g, vo), k_(k), m_(g.m()), best_(upper), best_pa_(std::move(incumbent)),
          page_(static_cast<std::size_t>(m_), PageAssignment::kUnassigned),
          load_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(k), 0) {
        seq_.resize(static_cast<std::size_t>(m_));
        std::iota(seq_.begin(), seq_.end(), 0);
        std::stable_sort(seq_.begin(), seq_.end(),
                         [&](int a, int b) { return cg_.neighbors(a).size() > cg_.neighbors(b).size(); });
    }

    void run() {
        if (best_ > 0) branch(0, -1);
    }

    std::int64_t best() const { return best_; }
    PageAssignment best_pa() const { return best_pa_; }

private:
    int& load(int e, int p) {
        return load_[static_cast<std::size_t>(e) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(p)];
    }

    std::int64_t remaining_bound(std::size_t from) {
        std::int64_t lb = 0;
        for (std::size_t j = from; j < seq_.size(); ++j) {
            int least = std::numeric_limits<int>::max();
            for (int p = 0; p < k_; ++p) least = std::min(least, load(seq_[j], p));
            lb += least;
        }
        return lb;
    }

    void branch(std::size_t i, int used) {
        if (i == seq_.size()) {
            best_ = current_;
            best_pa_ = PageAssignment(page_, k_);
            return;
        }
        const int e = seq_[i];
        const int limit = std::min(k_ - 1, used + 1);
        for (int p = 0; p <= limit; ++p) {
            const int added = load(e, p);
            current_ += added;
            page_[static_cast<std::size_t>(e)] = p;
            for (int f : cg_.neighbors(e)) ++load(f, p);
            if (current_ + remaining_bound(i + 1) < best_) branch(i + 1, std::max(used, p));
            for (int f : cg_.neighbors(e)) --load(f, p);
            page_[static_cast<std::size_t>(e)] = PageAssignment::kUnassigned;
            current_ -= added;
            if (best_ == 0) return;
        }
    }

    ConflictGraph cg_;
    int k_;
    int m_;
    std::int64_t best_;
    PageAssignment best_pa_;
    std::int64_t current_ = 0;
    std::vector<Page> page_;
    std::vector<int> load_;
    std::vector<int> seq_;
};

}  // namespace

ExactResult exact_book_crossing_number(const Graph& g, int k, bool force) {
    if (k < 1) throw std::invalid_argument("exact: k must be >= 1");
    if (!force && (g.n() > kExactMaxVertices || g.m() > kExactMaxEdges))
        throw SizeGuardError("exact: instance with n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) +
                             " exceeds n <= " + std::to_string(kExactMaxVertices) +
                             ", m <= " + std::to_string(kExactMaxEdges));

    const std::int64_t upper = con_greedy_plus(g, k, 0).crossings();
    OrderSearch search(g, k, upper);
    search.run();
    if (g.n() == 0) return {0, BookDrawing(g, VertexOrder::identity(0), PageAssignment(0, k))};

    BookDrawing witness(g, VertexOrder(search.best_order()), PageAssignment(search.best_pages(), k));
    witness.set_cached_crossings(search.best());
    return {search.best(), std::move(witness)};
}

ExactPaResult exact_pa(const Graph& g, const VertexOrder& vo, int k, bool force) {
    if (k < 1) throw std::invalid_argument("exact_pa: k must be >= 1");
    if (vo.size() != g.n()) throw std::invalid_argument("exact_pa: order size differs from vertex count");
    if (!force && g.m() > kExactPaMaxEdges)
        throw SizeGuardError("exact_pa: m=" + std::to_string(g.m()) + " exceeds " + std::to_string(kExactPaMaxEdges));

    PageAssignment incumbent = pa_ceil_floor(g, vo, k);
    std::int64_t upper = count_crossings(g, vo, incumbent);
    for (PaHeuristic h : all_pa_heuristics()) {
        if (upper == 0) break;
        PageAssignment pa = compute_pa(g, vo, k, h);
        const std::int64_t c = count_crossings(g, vo, pa);
        if (c < upper) {
            upper = c;
            incumbent = std::move(pa);
        }
    }
    PageSearch search(g, vo, k, upper, std::move(incumbent));
    search.run();
    return {search.best(), search.best_pa()};
}

}  // namespace bookdraw
