#include "bookdraw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace bookdraw {

namespace {

struct ClassEntry {
    GraphClass cls;
    std::string_view name;
};

constexpr ClassEntry kClassNames[] = {
    {GraphClass::RandomLinear, "random-linear"},
    {GraphClass::RandomQuadratic, "random-quadratic"},
    {GraphClass::PlanarTopological, "planar-topological"},
    {GraphClass::OnePlanarTopological, "oneplanar-topological"},
    {GraphClass::KPlanarGeometric, "kplanar-geometric"},
    {GraphClass::KTree, "ktree"},
    {GraphClass::Hypercube, "hypercube"},
    {GraphClass::CubeConnectedCycles, "ccc"},
    {GraphClass::Toroidal, "toroidal"},
    {GraphClass::Toroidal3, "toroidal3"},
};

std::int64_t pair_count(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

double orient(const Point& a, const Point& b, const Point& c) noexcept {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

std::string_view class_name(GraphClass c) noexcept {
    for (const auto& entry : kClassNames)
        if (entry.cls == c) return entry.name;
    return "unknown";
}

std::optional<GraphClass> parse_class(std::string_view name) noexcept {
    for (const auto& entry : kClassNames)
        if (entry.name == name) return entry.cls;
    return std::nullopt;
}

void GeneratorSpec::validate() const {
    const std::string tag(class_name(cls));
    switch (cls) {
    case GraphClass::RandomLinear:
        require(n >= 1, tag + ": n must be >= 1");
        require(density >= 0, tag + ": density must be >= 0");
        require(std::llround(density * n) <= pair_count(n), tag + ": a*n exceeds the complete graph");
        break;
    case GraphClass::RandomQuadratic:
        require(n >= 1, tag + ": n must be >= 1");
        require(density >= 0 && density <= 1, tag + ": probability must lie in [0,1]");
        break;
    case GraphClass::PlanarTopological:
    case GraphClass::OnePlanarTopological:
        require(n >= 4, tag + ": n must be >= 4");
        break;
    case GraphClass::KPlanarGeometric:
        require(n >= 2, tag + ": n must be >= 2");
        require(k >= 0 && k <= 4, tag + ": k must lie in 0..4");
        break;
    case GraphClass::KTree:
        require(k >= 1, tag + ": k must be >= 1");
        require(n >= k, tag + ": n must be >= k");
        break;
    case GraphClass::Hypercube:
        require(d >= 1 && d <= 24, tag + ": d must lie in 1..24");
        break;
    case GraphClass::CubeConnectedCycles:
        require(d >= 3 && d <= 20, tag + ": d must lie in 3..20");
        break;
    case GraphClass::Toroidal:
        require(cycles[0] >= 3 && cycles[1] >= 3, tag + ": cycle lengths must be >= 3");
        break;
    case GraphClass::Toroidal3:
        require(cycles[0] >= 3 && cycles[1] >= 3 && cycles[2] >= 3, tag + ": cycle lengths must be >= 3");
        break;
    }
}

bool GeneratorSpec::deterministic() const noexcept {
    switch (cls) {
    case GraphClass::Hypercube:
    case GraphClass::CubeConnectedCycles:
    case GraphClass::Toroidal:
    case GraphClass::Toroidal3:
        return true;
    default:
        return false;
    }
}

Graph generate(const GeneratorSpec& spec) {
    spec.validate();
    switch (spec.cls) {
    case GraphClass::RandomLinear: return gen_random_linear(spec.n, spec.density, spec.seed);
    case GraphClass::RandomQuadratic: return gen_random_quadratic(spec.n, spec.density, spec.seed);
    case GraphClass::PlanarTopological: return gen_planar_triangulation(spec.n, spec.seed).to_graph();
    case GraphClass::OnePlanarTopological: return gen_oneplanar_topological(spec.n, spec.seed).graph;
    case GraphClass::KPlanarGeometric: return gen_kplanar_geometric(spec.n, spec.k, spec.seed).graph;
    case GraphClass::KTree: return gen_ktree(spec.n, spec.k, spec.seed);
    case GraphClass::Hypercube: return gen_hypercube(spec.d);
    case GraphClass::CubeConnectedCycles: return gen_ccc(spec.d);
    case GraphClass::Toroidal: return gen_toroidal(spec.cycles[0], spec.cycles[1]);
    case GraphClass::Toroidal3: return gen_toroidal3(spec.cycles[0], spec.cycles[1], spec.cycles[2]);
    }
    throw std::invalid_argument("unknown graph class");
}

Graph gen_random_linear(int n, double a, std::uint64_t seed) {
    const std::int64_t total = pair_count(n);
    const std::int64_t m = std::llround(a * n);
    if (n < 1 || m < 0 || m > total)
        throw std::invalid_argument("random-linear: a*n exceeds the complete graph");

    // Floyd's sampling of an m-subset of pair indices.
    Rng rng(seed);
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::int64_t j = total - m; j < total; ++j) {
        const auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::int64_t> indices(chosen.begin(), chosen.end());
    std::sort(indices.begin(), indices.end());

    Graph g(n);
    Vertex u = 0;
    std::int64_t row_start = 0;
    for (std::int64_t idx : indices) {
        while (idx >= row_start + (n - 1 - u)) {
            row_start += n - 1 - u;
            ++u;
        }
        g.add_edge(u, static_cast<Vertex>(u + 1 + (idx - row_start)));
    }
    return g;
}

Graph gen_random_quadratic(int n, double p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("random-quadratic: probability must lie in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

// ---- Triangulation -------------------------------------------------------

Triangulation::Triangulation(int capacity)
    : capacity_(capacity),
      face_of_(static_cast<std::size_t>(capacity) * static_cast<std::size_t>(capacity), -1),
      edge_index_(static_cast<std::size_t>(capacity) * static_cast<std::size_t>(capacity), -1) {}

Triangulation Triangulation::tetrahedron(int capacity) {
    if (capacity < 4) throw std::invalid_argument("triangulation: need n >= 4");
    Triangulation t(capacity);
    t.n_ = 4;
    t.faces_.reserve(static_cast<std::size_t>(2 * capacity));
    t.edges_.reserve(static_cast<std::size_t>(3 * capacity));
    t.add_face(0, 1, 3);
    t.add_face(1, 2, 3);
    t.add_face(2, 0, 3);
    t.add_face(0, 2, 1);
    const std::pair<Vertex, Vertex> initial[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
    for (auto [u, v] : initial) t.link_edge(u, v);
    return t;
}

bool Triangulation::has_edge(Vertex u, Vertex v) const noexcept {
    return u != v && face_of_[static_cast<std::size_t>(dir_index(u, v))] != -1;
}

int Triangulation::add_face(Vertex a, Vertex b, Vertex c) {
    const int f = static_cast<int>(faces_.size());
    faces_.push_back({a, b, c});
    set_face(f, a, b, c);
    return f;
}

void Triangulation::set_face(int f, Vertex a, Vertex b, Vertex c) {
    faces_[static_cast<std::size_t>(f)] = {a, b, c};
    face_of_[static_cast<std::size_t>(dir_index(a, b))] = f;
    face_of_[static_cast<std::size_t>(dir_index(b, c))] = f;
    face_of_[static_cast<std::size_t>(dir_index(c, a))] = f;
}

void Triangulation::link_edge(Vertex u, Vertex v) {
    const int idx = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    edge_index_[static_cast<std::size_t>(dir_index(u, v))] = idx;
    edge_index_[static_cast<std::size_t>(dir_index(v, u))] = idx;
}

Vertex Triangulation::insert_into_face(int f) {
    if (n_ >= capacity_) throw std::length_error("triangulation: capacity exhausted");
    const auto [a, b, c] = faces_[static_cast<std::size_t>(f)];
    const Vertex x = n_++;
    set_face(f, a, b, x);
    add_face(b, c, x);
    add_face(c, a, x);
    link_edge(a, x);
    link_edge(b, x);
    link_edge(c, x);
    return x;
}

std::pair<Vertex, Vertex> Triangulation::apexes(Vertex u, Vertex v) const {
    auto apex = [&](Vertex from, Vertex to) {
        const int f = face_of_[static_cast<std::size_t>(dir_index(from, to))];
        if (f < 0) throw std::invalid_argument("triangulation: not an edge");
        for (Vertex w : faces_[static_cast<std::size_t>(f)])
            if (w != from && w != to) return w;
        throw std::logic_error("triangulation: degenerate face");
    };
    return {apex(u, v), apex(v, u)};
}

bool Triangulation::flip(Vertex u, Vertex v) {
    const auto [a, b] = apexes(u, v);
    if (a == b || has_edge(a, b)) return false;
    const int f1 = face_of_[static_cast<std::size_t>(dir_index(u, v))];
    const int f2 = face_of_[static_cast<std::size_t>(dir_index(v, u))];
    face_of_[static_cast<std::size_t>(dir_index(u, v))] = -1;
    face_of_[static_cast<std::size_t>(dir_index(v, u))] = -1;
    // Faces (u,v,a) and (v,u,b) become (a,u,b) and (b,v,a).
    set_face(f1, a, u, b);
    set_face(f2, b, v, a);
    const int idx = edge_index_[static_cast<std::size_t>(dir_index(u, v))];
    edge_index_[static_cast<std::size_t>(dir_index(u, v))] = -1;
    edge_index_[static_cast<std::size_t>(dir_index(v, u))] = -1;
    edges_[static_cast<std::size_t>(idx)] = Edge(a, b);
    edge_index_[static_cast<std::size_t>(dir_index(a, b))] = idx;
    edge_index_[static_cast<std::size_t>(dir_index(b, a))] = idx;
    return true;
}

bool Triangulation::flip_edge_index(int index) {
    const Edge e = edges_[static_cast<std::size_t>(index)];
    return flip(e.u, e.v);
}

Graph Triangulation::to_graph() const { return Graph(n_, edges_); }

bool Triangulation::check_embedding() const {
    if (static_cast<int>(faces_.size()) != 2 * n_ - 4) return false;
    if (m() != 3 * n_ - 6) return false;
    std::vector<int> uses(static_cast<std::size_t>(capacity_) * static_cast<std::size_t>(capacity_), 0);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& face = faces_[f];
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) return false;
        for (int i = 0; i < 3; ++i) {
            const Vertex a = face[static_cast<std::size_t>(i)];
            const Vertex b = face[static_cast<std::size_t>((i + 1) % 3)];
            if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
            const auto d = static_cast<std::size_t>(dir_index(a, b));
            if (++uses[d] != 1 || face_of_[d] != static_cast<int>(f)) return false;
        }
    }
    for (const Edge& e : edges_) {
        if (uses[static_cast<std::size_t>(dir_index(e.u, e.v))] != 1 ||
            uses[static_cast<std::size_t>(dir_index(e.v, e.u))] != 1)
            return false;
    }
    // Each vertex's incident faces must form a single rotation cycle.
    std::vector<int> degree(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> some_neighbor(static_cast<std::size_t>(n_), -1);
    for (const Edge& e : edges_) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        some_neighbor[static_cast<std::size_t>(e.u)] = e.v;
        some_neighbor[static_cast<std::size_t>(e.v)] = e.u;
    }
    for (Vertex v = 0; v < n_; ++v) {
        const Vertex start = some_neighbor[static_cast<std::size_t>(v)];
        if (start < 0) return false;
        Vertex cur = start;
        int steps = 0;
        do {
            const auto& face = faces_[static_cast<std::size_t>(face_of_[static_cast<std::size_t>(dir_index(v, cur))])];
            // face is a rotation of (v, cur, next)
            int at = 0;
            while (face[static_cast<std::size_t>(at)] != v) ++at;
            cur = face[static_cast<std::size_t>((at + 2) % 3)];
            ++steps;
        } while (cur != start && steps <= degree[static_cast<std::size_t>(v)]);
        if (steps != degree[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

Triangulation gen_apollonian(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("apollonian: n must be >= 4");
    Rng rng(seed);
    auto t = Triangulation::tetrahedron(n);
    while (t.n() < n) t.insert_into_face(static_cast<int>(rng.below(t.faces().size())));
    return t;
}

Triangulation gen_planar_triangulation(int n, std::uint64_t seed, std::optional<std::int64_t> flip_attempts) {
    auto t = gen_apollonian(n, seed);
    Rng rng(derive_seed(seed, {1}));
    const std::int64_t attempts =
        flip_attempts.value_or(static_cast<std::int64_t>(n) * n * n);
    const auto m = static_cast<std::uint64_t>(t.m());
    for (std::int64_t i = 0; i < attempts; ++i) t.flip_edge_index(static_cast<int>(rng.below(m)));
    return t;
}

OnePlanarGraph gen_oneplanar_topological(int n, std::uint64_t seed, std::optional<std::int64_t> flip_attempts) {
    const auto t = gen_planar_triangulation(n, seed, flip_attempts);
    OnePlanarGraph out{t.to_graph(), t.m(), {}};

    // Face id lookup per oriented triangle.
    std::vector<int> face_id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (std::size_t f = 0; f < t.faces().size(); ++f) {
        const auto& face = t.faces()[f];
        for (int i = 0; i < 3; ++i)
            face_id[static_cast<std::size_t>(face[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(face[static_cast<std::size_t>((i + 1) % 3)])] = static_cast<int>(f);
    }

    Rng rng(derive_seed(seed, {2}));
    std::vector<int> order(static_cast<std::size_t>(t.m()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    rng.shuffle(order);

    // A diagonal is routed through both faces of its quadrilateral, so each
    // face can host at most one diagonal; otherwise two diagonals would cross.
    std::vector<char> face_used(t.faces().size(), 0);
    for (int idx : order) {
        const Edge shared = t.edges()[static_cast<std::size_t>(idx)];
        const auto [a, b] = t.apexes(shared.u, shared.v);
        if (a == b || out.graph.has_edge(a, b)) continue;
        const auto f1 = static_cast<std::size_t>(
            face_id[static_cast<std::size_t>(shared.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(shared.v)]);
        const auto f2 = static_cast<std::size_t>(
            face_id[static_cast<std::size_t>(shared.v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(shared.u)]);
        if (face_used[f1] || face_used[f2]) continue;
        face_used[f1] = face_used[f2] = 1;
        const EdgeId diagonal = out.graph.add_edge(a, b);
        out.crossings.emplace_back(diagonal, idx);
    }
    return out;
}

// ---- geometric k-planar --------------------------------------------------

bool segments_cross(const Point& p1, const Point& p2, const Point& p3, const Point& p4) noexcept {
    const double o1 = orient(p1, p2, p3);
    const double o2 = orient(p1, p2, p4);
    if ((o1 > 0) == (o2 > 0) || o1 == 0 || o2 == 0) return false;
    const double o3 = orient(p3, p4, p1);
    const double o4 = orient(p3, p4, p2);
    return (o3 > 0) != (o4 > 0) && o3 != 0 && o4 != 0;
}

std::vector<Point> random_points(int n, Rng& rng) {
    constexpr double kCollinearTol = 1e-12;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        const Point p{rng.uniform01(), rng.uniform01()};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                if (std::abs(orient(pts[i], pts[j], p)) < kCollinearTol) ok = false;
        if (ok) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x <= pts[i - 1].x) pts[i].x = pts[i - 1].x + 1e-12 * static_cast<double>(i);
    return pts;
}

GeometricGraph gen_kplanar_geometric(int n, int k, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("kplanar-geometric: n must be >= 2");
    if (k < 0 || k > 4) throw std::invalid_argument("kplanar-geometric: k must lie in 0..4");
    Rng rng(seed);
    GeometricGraph out{Graph(n), random_points(n, rng), {}, {}};
    const auto& pts = out.points;

    struct Box {
        double x0, x1, y0, y1;
    };
    std::vector<Box> boxes;
    std::vector<EdgeId> hit;
    for (Vertex i = 1; i < n; ++i) {
        const Point& pi = pts[static_cast<std::size_t>(i)];
        for (Vertex j = i - 1; j >= 0; --j) {
            const Point& pj = pts[static_cast<std::size_t>(j)];
            const Box box{pj.x, pi.x, std::min(pj.y, pi.y), std::max(pj.y, pi.y)};
            hit.clear();
            bool ok = true;
            for (EdgeId e = 0; e < out.graph.m() && ok; ++e) {
                const Box& eb = boxes[static_cast<std::size_t>(e)];
                if (eb.x1 <= box.x0 || eb.x0 >= box.x1 || eb.y1 <= box.y0 || eb.y0 >= box.y1) continue;
                const Edge& seg = out.graph.edge(e);
                if (seg.has(i) || seg.has(j)) continue;
                if (!segments_cross(pj, pi, pts[static_cast<std::size_t>(seg.u)], pts[static_cast<std::size_t>(seg.v)]))
                    continue;
                hit.push_back(e);
                if (static_cast<int>(hit.size()) > k || out.crossings_per_edge[static_cast<std::size_t>(e)] >= k)
                    ok = false;
            }
            if (!ok) continue;
            const EdgeId id = out.graph.add_edge(j, i);
            boxes.push_back(box);
            out.crossings_per_edge.push_back(static_cast<int>(hit.size()));
            for (EdgeId e : hit) {
                ++out.crossings_per_edge[static_cast<std::size_t>(e)];
                out.crossings.emplace_back(id, e);
            }
        }
    }
    return out;
}

double max_kplanar_edges(int n, int k) {
    static constexpr double kSlope[] = {3.0, 4.0, 5.0, 5.5, 6.0};
    if (k < 0 || k > 4) throw std::invalid_argument("max_kplanar_edges: k must lie in 0..4");
    const double a = kSlope[k];
    return a * n - 2.0 * a;
}

// ---- structured and homogeneous classes ----------------------------------

Graph gen_ktree(int n, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("ktree: k must be >= 1");
    if (n < k) throw std::invalid_argument("ktree: n must be >= k");
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);

    // Flat storage: clique c occupies cliques[c*k, c*k + k).
    std::vector<Vertex> cliques;
    cliques.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(1 + (n - k) * k));
    for (Vertex u = 0; u < k; ++u) cliques.push_back(u);
    const auto ku = static_cast<std::size_t>(k);
    for (Vertex v = k; v < n; ++v) {
        const std::size_t count = cliques.size() / ku;
        const std::size_t c = static_cast<std::size_t>(rng.below(count));
        const std::vector<Vertex> base(cliques.begin() + static_cast<std::ptrdiff_t>(c * ku),
                                       cliques.begin() + static_cast<std::ptrdiff_t>((c + 1) * ku));
        for (Vertex w : base) g.add_edge(w, v);
        for (std::size_t drop = 0; drop < ku; ++drop) {
            for (std::size_t t = 0; t < ku; ++t)
                if (t != drop) cliques.push_back(base[t]);
            cliques.push_back(v);
        }
    }
    return g;
}

Graph gen_hypercube(int d) {
    if (d < 1 || d > 24) throw std::invalid_argument("hypercube: d must lie in 1..24");
    const int n = 1 << d;
    Graph g(n);
    for (Vertex x = 0; x < n; ++x)
        for (int b = 0; b < d; ++b) {
            const Vertex y = x ^ (1 << b);
            if (x < y) g.add_edge(x, y);
        }
    return g;
}

Graph gen_ccc(int d) {
    if (d < 3 || d > 20) throw std::invalid_argument("ccc: d must lie in 3..20");
    const int corners = 1 << d;
    Graph g(d * corners);
    auto id = [d](int x, int i) { return static_cast<Vertex>(x * d + i); };
    for (int x = 0; x < corners; ++x)
        for (int i = 0; i < d; ++i) {
            g.add_edge(id(x, i), id(x, (i + 1) % d));
            const int y = x ^ (1 << i);
            if (x < y) g.add_edge(id(x, i), id(y, i));
        }
    return g;
}

Graph gen_toroidal(int i, int j) {
    if (i < 3 || j < 3) throw std::invalid_argument("toroidal: cycle lengths must be >= 3");
    Graph g(i * j);
    auto id = [j](int a, int b) { return static_cast<Vertex>(a * j + b); };
    for (int a = 0; a < i; ++a)
        for (int b = 0; b < j; ++b) {
            g.add_edge(id(a, b), id(a, (b + 1) % j));
            g.add_edge(id(a, b), id((a + 1) % i, b));
        }
    return g;
}

Graph gen_toroidal3(int i, int j, int k) {
    if (i < 3 || j < 3 || k < 3) throw std::invalid_argument("toroidal3: cycle lengths must be >= 3");
    Graph g(i * j * k);
    auto id = [j, k](int a, int b, int c) { return static_cast<Vertex>((a * j + b) * k + c); };
    for (int a = 0; a < i; ++a)
        for (int b = 0; b < j; ++b)
            for (int c = 0; c < k; ++c) {
                g.add_edge(id(a, b, c), id(a, b, (c + 1) % k));
                g.add_edge(id(a, b, c), id(a, (b + 1) % j, c));
                g.add_edge(id(a, b, c), id((a + 1) % i, b, c));
            }
    return g;
}

RandomizedGraph randomize_representation(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    RandomizedGraph out{Graph(g.n()), random_permutation(g.n(), rng)};
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    rng.shuffle(edges);
    for (const Edge& e : edges)
        out.graph.add_edge(out.relabel[static_cast<std::size_t>(e.u)], out.relabel[static_cast<std::size_t>(e.v)]);
    for (Vertex v = 0; v < g.n(); ++v) rng.shuffle(out.graph.mutable_incident(v));
    return out;
}

}  // namespace bookdraw
