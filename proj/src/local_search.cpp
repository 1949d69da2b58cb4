#include "bookdraw/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bookdraw/crossings.hpp"
#include "bookdraw/rng.hpp"

namespace bookdraw {

namespace {

struct LsEntry {
    LocalSearch ls;
    std::string_view name;
};

constexpr LsEntry kLsNames[] = {
    {LocalSearch::None, "none"},
    {LocalSearch::GreedyAlt, "greedyAlt"},
    {LocalSearch::GreedyPlus, "greedy+"},
    {LocalSearch::Annealing, "sa"},
};

/// Mutable drawing with per-page edge lists for fast page queries.
class SearchState {
    const Graph& g_;

public:
    explicit SearchState(const BookDrawing& d)
        : g_(d.graph()), vo(d.vo()), pa(d.pa()), crossings(d.crossings()),
          members_(static_cast<std::size_t>(d.k())), slot_(static_cast<std::size_t>(g_.m()), -1) {
        for (EdgeId e = 0; e < g_.m(); ++e) link(e, pa.page(e));
    }

    const Graph& graph() const noexcept { return g_; }

    void set_page(EdgeId e, Page p) {
        const Page old = pa.page(e);
        if (old == p) return;
        auto& list = members_[static_cast<std::size_t>(old)];
        const auto at = static_cast<std::size_t>(slot_[static_cast<std::size_t>(e)]);
        list[at] = list.back();
        slot_[static_cast<std::size_t>(list[at])] = static_cast<int>(at);
        list.pop_back();
        pa.assign(e, p);
        link(e, p);
    }

    std::int64_t edge_crossings_on(EdgeId e, Page p) const {
        const Edge& edge = g_.edge(e);
        const auto pos = vo.positions();
        const int a = std::min(pos[static_cast<std::size_t>(edge.u)], pos[static_cast<std::size_t>(edge.v)]);
        const int b = std::max(pos[static_cast<std::size_t>(edge.u)], pos[static_cast<std::size_t>(edge.v)]);
        std::int64_t count = 0;
        for (EdgeId f : members_[static_cast<std::size_t>(p)]) {
            const Edge& other = g_.edge(f);
            const int c = pos[static_cast<std::size_t>(other.u)];
            const int d = pos[static_cast<std::size_t>(other.v)];
            // Includes f == e, which shares both endpoints.
            const bool shared = c == a || c == b || d == a || d == b;
            const bool c_in = a < c && c < b;
            const bool d_in = a < d && d < b;
            count += !shared && c_in != d_in;
        }
        return count;
    }

    /// Crossings of v's incident edges, per (incident edge, page) with layout
    /// [i * k + p], for v reinserted at `slot` of the spine without v and for
    /// v where it is now.
    void relocation_costs(Vertex v, int slot, std::vector<int>& at_new, std::vector<int>& at_cur) {
        const int k = pa.k();
        const auto inc = g_.incident(v);
        const auto pos = vo.positions();
        const int cur = pos[static_cast<std::size_t>(v)];
        const auto reduce = [cur](int p) { return p - (p > cur ? 1 : 0); };
        anchors_.clear();
        for (const auto& e : inc) anchors_.push_back(reduce(pos[static_cast<std::size_t>(e.neighbor)]));
        const std::size_t deg = inc.size();
        at_new.assign(deg * static_cast<std::size_t>(k), 0);
        at_cur.assign(deg * static_cast<std::size_t>(k), 0);
        for (int p = 0; p < k; ++p) {
            for (EdgeId f : members_[static_cast<std::size_t>(p)]) {
                const Edge& other = g_.edge(f);
                if (other.has(v)) continue;
                int lo = reduce(pos[static_cast<std::size_t>(other.u)]);
                int hi = reduce(pos[static_cast<std::size_t>(other.v)]);
                if (lo > hi) std::swap(lo, hi);
                const bool new_inside = lo < slot && slot <= hi;
                const bool cur_inside = lo < cur && cur <= hi;
                for (std::size_t i = 0; i < deg; ++i) {
                    const int a = anchors_[i];
                    const bool shared = a == lo || a == hi;
                    const bool anchor_inside = lo < a && a < hi;
                    const std::size_t at = i * static_cast<std::size_t>(k) + static_cast<std::size_t>(p);
                    at_new[at] += !shared && new_inside != anchor_inside;
                    at_cur[at] += !shared && cur_inside != anchor_inside;
                }
            }
        }
    }

    BookDrawing to_drawing() const {
        BookDrawing d(g_, vo, pa);
        d.set_cached_crossings(crossings);
        return d;
    }

    VertexOrder vo;
    PageAssignment pa;
    std::int64_t crossings;

private:
    void link(EdgeId e, Page p) {
        auto& list = members_[static_cast<std::size_t>(p)];
        slot_[static_cast<std::size_t>(e)] = static_cast<int>(list.size());
        list.push_back(e);
    }

    std::vector<std::vector<EdgeId>> members_;
    std::vector<int> slot_;
    std::vector<int> anchors_;
};

/// Best reinsertion of v: position and page per incident edge.
struct Reinsertion {
    int slot;
    std::vector<Page> pages;
    std::int64_t current_cost;
    std::int64_t new_cost;
};

Reinsertion best_reinsertion(const SearchState& st, Vertex v) {
    const Graph& g = st.graph();
    const int k = st.pa.k();
    const int cur = st.vo.position(v);
    const auto costs = vertex_edge_page_costs(g, st.vo, st.pa, v);
    const auto inc = g.incident(v);

    std::vector<std::int64_t> total(static_cast<std::size_t>(g.n()), 0);
    std::int64_t current = 0;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        const auto& per_page = costs[i];
        current += per_page[static_cast<std::size_t>(st.pa.page(inc[i].edge))][static_cast<std::size_t>(cur)];
        for (std::size_t s = 0; s < total.size(); ++s) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (int p = 0; p < k; ++p) best = std::min(best, per_page[static_cast<std::size_t>(p)][s]);
            total[s] += best;
        }
    }
    int slot = cur;
    for (int s = 0; s < g.n(); ++s)
        if (total[static_cast<std::size_t>(s)] < total[static_cast<std::size_t>(slot)]) slot = s;

    Reinsertion r{slot, std::vector<Page>(inc.size(), 0), current, total[static_cast<std::size_t>(slot)]};
    for (std::size_t i = 0; i < inc.size(); ++i) {
        Page best = 0;
        for (int p = 1; p < k; ++p)
            if (costs[i][static_cast<std::size_t>(p)][static_cast<std::size_t>(slot)] <
                costs[i][static_cast<std::size_t>(best)][static_cast<std::size_t>(slot)])
                best = p;
        r.pages[i] = best;
    }
    return r;
}

void apply_reinsertion(SearchState& st, Vertex v, const Reinsertion& r) {
    st.vo.move(v, r.slot);
    const auto inc = st.graph().incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) st.set_page(inc[i].edge, r.pages[i]);
    st.crossings += r.new_cost - r.current_cost;
}

std::int64_t adjacent_swap_delta(const SearchState& st, int pos) {
    const Graph& g = st.graph();
    const Vertex a = st.vo.at(pos);
    const Vertex b = st.vo.at(pos + 1);
    std::int64_t delta = 0;
    for (const auto& ea : g.incident(a)) {
        if (ea.neighbor == b) continue;
        const Page pa_page = st.pa.page(ea.edge);
        const int px = st.vo.position(ea.neighbor);
        for (const auto& eb : g.incident(b)) {
            if (eb.neighbor == a || eb.neighbor == ea.neighbor || st.pa.page(eb.edge) != pa_page) continue;
            // Exchanging two neighbors on the spine toggles whether such a pair crosses.
            const bool crossed = chords_alternate(pos, px, pos + 1, st.vo.position(eb.neighbor));
            delta += crossed ? -1 : 1;
        }
    }
    return delta;
}

void notify(const MoveObserver& observer, MoveFamily family, std::int64_t delta, bool accepted, double temperature,
            std::int64_t after) {
    if (observer) observer(MoveEvent{family, delta, accepted, temperature, after});
}

}  // namespace

std::string_view ls_name(LocalSearch ls) noexcept {
    for (const auto& e : kLsNames)
        if (e.ls == ls) return e.name;
    return "unknown";
}

std::optional<LocalSearch> parse_ls(std::string_view name) noexcept {
    for (const auto& e : kLsNames)
        if (e.name == name) return e.ls;
    return std::nullopt;
}

LocalSearchResult ls_greedy_alt(const BookDrawing& d, std::uint64_t seed, int max_cycles, const MoveObserver& observer) {
    if (max_cycles < 1) throw std::invalid_argument("greedyAlt: max_cycles must be >= 1");
    Rng rng(seed);
    SearchState st(d);
    const Graph& g = st.graph();
    std::vector<Vertex> vertices(static_cast<std::size_t>(g.n()));
    std::vector<EdgeId> edges(static_cast<std::size_t>(g.m()));

    int cycles = 0;
    while (cycles < max_cycles) {
        ++cycles;
        std::int64_t gained = 0;

        std::iota(vertices.begin(), vertices.end(), 0);
        rng.shuffle(vertices);
        for (Vertex v : vertices) {
            const auto costs = vertex_position_costs(g, st.vo, st.pa, v);
            const int cur = st.vo.position(v);
            int best = cur;
            for (int s = 0; s < g.n(); ++s)
                if (costs[static_cast<std::size_t>(s)] < costs[static_cast<std::size_t>(best)]) best = s;
            if (best == cur) continue;
            const std::int64_t delta = costs[static_cast<std::size_t>(best)] - costs[static_cast<std::size_t>(cur)];
            st.vo.move(v, best);
            st.crossings += delta;
            gained -= delta;
            notify(observer, MoveFamily::VertexPosition, delta, true, 0.0, st.crossings);
        }

        std::iota(edges.begin(), edges.end(), 0);
        rng.shuffle(edges);
        for (EdgeId e : edges) {
            const Page cur = st.pa.page(e);
            const std::int64_t here = st.edge_crossings_on(e, cur);
            Page best = cur;
            std::int64_t best_cost = here;
            for (int p = 0; p < st.pa.k(); ++p) {
                if (p == cur) continue;
                const std::int64_t c = st.edge_crossings_on(e, p);
                if (c < best_cost) {
                    best = p;
                    best_cost = c;
                }
            }
            if (best == cur) continue;
            st.set_page(e, best);
            st.crossings += best_cost - here;
            gained += here - best_cost;
            notify(observer, MoveFamily::EdgePage, best_cost - here, true, 0.0, st.crossings);
        }
        if (gained == 0) break;
    }
    return {st.to_drawing(), cycles};
}

LocalSearchResult ls_greedy_plus(const BookDrawing& d, std::uint64_t seed, int max_rounds, const MoveObserver& observer) {
    if (max_rounds < 1) throw std::invalid_argument("greedy+: max_rounds must be >= 1");
    Rng rng(seed);
    SearchState st(d);
    std::vector<Vertex> vertices(static_cast<std::size_t>(st.graph().n()));

    int rounds = 0;
    while (rounds < max_rounds) {
        ++rounds;
        std::int64_t gained = 0;
        std::iota(vertices.begin(), vertices.end(), 0);
        rng.shuffle(vertices);
        for (Vertex v : vertices) {
            const Reinsertion r = best_reinsertion(st, v);
            if (r.new_cost >= r.current_cost) continue;
            apply_reinsertion(st, v, r);
            gained += r.current_cost - r.new_cost;
            notify(observer, MoveFamily::BestPosition, r.new_cost - r.current_cost, true, 0.0, st.crossings);
        }
        if (gained == 0) break;
    }
    return {st.to_drawing(), rounds};
}

void AnnealingSchedule::validate() const {
    if (iterations < 1) throw std::invalid_argument("annealing: iterations must be >= 1");
    if (t0 && !(*t0 > 0)) throw std::invalid_argument("annealing: initial temperature must be > 0");
    if (alpha && !(*alpha > 0 && *alpha < 1)) throw std::invalid_argument("annealing: alpha must lie in (0,1)");
    if (edge_moves && *edge_moves < 0) throw std::invalid_argument("annealing: negative edge move count");
    if (swap_moves && *swap_moves < 0) throw std::invalid_argument("annealing: negative swap move count");
    if (relocation_moves && *relocation_moves < 0) throw std::invalid_argument("annealing: negative relocation count");
    if (best_position_probability && (*best_position_probability < 0 || *best_position_probability > 1))
        throw std::invalid_argument("annealing: best-position probability must lie in [0,1]");
}

ResolvedSchedule resolve_schedule(const AnnealingSchedule& s, int n, int m, std::int64_t crossings) {
    s.validate();
    const auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    ResolvedSchedule r{};
    r.iterations = s.iterations;
    r.t0 = s.t0.value_or(std::max(1.0, static_cast<double>(crossings) / 10.0));
    r.alpha = s.alpha.value_or(s.iterations > 1 ? std::pow(1e-3, 1.0 / static_cast<double>(s.iterations - 1)) : 1e-3);
    r.edge_moves = s.edge_moves.value_or(m);
    r.swap_moves = s.swap_moves.value_or(static_cast<std::int64_t>(n) * root);
    r.relocation_moves = s.relocation_moves.value_or(n);
    r.best_position_probability =
        s.best_position_probability.value_or(n > 0 ? std::min(1.0, 4.0 / static_cast<double>(n)) : 0.0);
    return r;
}

LocalSearchResult ls_simulated_annealing(const BookDrawing& d, std::uint64_t seed, const AnnealingSchedule& schedule,
                                         const MoveObserver& observer) {
    const Graph& g = d.graph();
    const ResolvedSchedule sched = resolve_schedule(schedule, g.n(), g.m(), d.crossings());
    Rng rng(seed);
    SearchState st(d);
    const int n = g.n();
    const int m = g.m();
    const int k = st.pa.k();

    VertexOrder best_vo = st.vo;
    PageAssignment best_pa = st.pa;
    std::int64_t best = st.crossings;
    auto record = [&] {
        if (st.crossings < best) {
            best = st.crossings;
            best_vo = st.vo;
            best_pa = st.pa;
        }
    };

    double temperature = sched.t0;
    auto accept = [&](std::int64_t delta) {
        if (delta <= 0) return true;
        return rng.uniform01() < std::exp(-static_cast<double>(delta) / temperature);
    };

    std::vector<int> at_new;
    std::vector<int> at_cur;
    std::vector<Page> pages;
    for (int it = 0; it < sched.iterations; ++it, temperature *= sched.alpha) {
        if (best == 0) break;

        // (1) an edge to a random page
        for (std::int64_t t = 0; t < sched.edge_moves && m > 0 && k > 1; ++t) {
            const auto e = static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(m)));
            const auto p = static_cast<Page>(rng.below(static_cast<std::uint64_t>(k)));
            const Page cur = st.pa.page(e);
            if (p == cur) continue;
            const std::int64_t delta = st.edge_crossings_on(e, p) - st.edge_crossings_on(e, cur);
            const bool ok = accept(delta);
            if (ok) {
                st.set_page(e, p);
                st.crossings += delta;
                record();
            }
            notify(observer, MoveFamily::EdgePage, delta, ok, temperature, st.crossings);
        }

        // (2) a random vertex swapped with its left or right spine neighbor
        for (std::int64_t t = 0; t < sched.swap_moves && n > 1; ++t) {
            const int pos = st.vo.position(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
            const bool right = rng.below(2) == 1;
            int left_pos = right ? pos : pos - 1;
            if (left_pos < 0) left_pos = 0;
            if (left_pos > n - 2) left_pos = n - 2;
            const std::int64_t delta = adjacent_swap_delta(st, left_pos);
            const bool ok = accept(delta);
            if (ok) {
                st.vo.swap_adjacent(left_pos);
                st.crossings += delta;
                record();
            }
            notify(observer, MoveFamily::AdjacentSwap, delta, ok, temperature, st.crossings);
        }

        // (3) a random vertex to a random position, its edges re-paged greedily
        for (std::int64_t t = 0; t < sched.relocation_moves && n > 1; ++t) {
            const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
            const auto slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            st.relocation_costs(v, slot, at_new, at_cur);
            const auto inc = g.incident(v);
            std::int64_t before = 0;
            std::int64_t after = 0;
            pages.assign(inc.size(), 0);
            for (std::size_t i = 0; i < inc.size(); ++i) {
                const std::size_t row = i * static_cast<std::size_t>(k);
                before += at_cur[row + static_cast<std::size_t>(st.pa.page(inc[i].edge))];
                for (int p = 1; p < k; ++p)
                    if (at_new[row + static_cast<std::size_t>(p)] < at_new[row + static_cast<std::size_t>(pages[i])])
                        pages[i] = p;
                after += at_new[row + static_cast<std::size_t>(pages[i])];
            }
            const std::int64_t delta = after - before;
            const bool ok = accept(delta);
            if (ok) {
                apply_reinsertion(st, v, Reinsertion{slot, pages, before, after});
                record();
            }
            notify(observer, MoveFamily::Relocation, delta, ok, temperature, st.crossings);
        }

        // (4) occasionally, a greedy+ style best-position search
        if (n > 1 && rng.bernoulli(sched.best_position_probability)) {
            const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
            const Reinsertion r = best_reinsertion(st, v);
            const std::int64_t delta = r.new_cost - r.current_cost;
            const bool ok = accept(delta);
            if (ok) {
                apply_reinsertion(st, v, r);
                record();
            }
            notify(observer, MoveFamily::BestPosition, delta, ok, temperature, st.crossings);
        }
    }

    BookDrawing out(g, std::move(best_vo), std::move(best_pa));
    out.set_cached_crossings(best);
    return {std::move(out), sched.iterations};
}

LocalSearchResult run_local_search(LocalSearch ls, const BookDrawing& d, std::uint64_t seed,
                                   const LocalSearchOptions& options) {
    switch (ls) {
    case LocalSearch::None: return {d, 0};
    case LocalSearch::GreedyAlt: return ls_greedy_alt(d, seed, options.max_rounds);
    case LocalSearch::GreedyPlus: return ls_greedy_plus(d, seed, options.max_rounds);
    case LocalSearch::Annealing: return ls_simulated_annealing(d, seed, options.schedule);
    }
    throw std::invalid_argument("unknown local search");
}

}  // namespace bookdraw
