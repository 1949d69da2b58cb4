#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bookdraw/graph.hpp"
#include "bookdraw/rng.hpp"

namespace bookdraw {

enum class GraphClass {
    RandomLinear,
    RandomQuadratic,
    PlanarTopological,
    OnePlanarTopological,
    KPlanarGeometric,
    KTree,
    Hypercube,
    CubeConnectedCycles,
    Toroidal,
    Toroidal3,
};

std::string_view class_name(GraphClass c) noexcept;
std::optional<GraphClass> parse_class(std::string_view name) noexcept;

/// Declarative generator request. Which fields matter depends on `cls`.
struct GeneratorSpec {
    GraphClass cls = GraphClass::RandomLinear;
    int n = 0;
    double density = 0.0;  // a for random-linear, p for random-quadratic
    int k = 0;             // k-planar crossing cap, k-tree clique size
    int d = 0;             // hypercube / ccc dimension
    std::array<int, 3> cycles{0, 0, 0};
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when the parameters do not fit the class.
    void validate() const;
    /// Classes whose output does not depend on the seed.
    bool deterministic() const noexcept;
};

Graph generate(const GeneratorSpec& spec);

/// Exactly round(a*n) edges, uniformly among simple graphs with that many edges.
Graph gen_random_linear(int n, double a, std::uint64_t seed);
/// G(n, p).
Graph gen_random_quadratic(int n, double p, std::uint64_t seed);

using Face = std::array<Vertex, 3>;

/**
 * @brief Combinatorial triangulation of the sphere with O(1) flips.
 *
 * Faces are oriented triangles; every directed edge u->v belongs to exactly
 * one face. Vertex capacity is fixed at construction (adjacency is a dense
 * capacity x capacity table).
 */
class Triangulation {
public:
    /// K4 on vertices 0..3, room for `capacity` vertices.
    static Triangulation tetrahedron(int capacity);

    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Face> faces() const noexcept { return faces_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const noexcept;

    /// Adds vertex n() inside face f, splitting it into three.
    Vertex insert_into_face(int f);

    /// The two vertices opposite edge {u,v}: apex of the face containing
    /// u->v, then apex of the face containing v->u.
    std::pair<Vertex, Vertex> apexes(Vertex u, Vertex v) const;

    /// Replaces edge {u,v} by the other diagonal of its quadrilateral.
    /// Returns false (and changes nothing) if that diagonal already exists.
    bool flip(Vertex u, Vertex v);
    bool flip_edge_index(int index);

    Graph to_graph() const;

    /// Every directed edge in exactly one face, reverse present, Euler count 2n-4.
    bool check_embedding() const;

private:
    explicit Triangulation(int capacity);
    int dir_index(Vertex u, Vertex v) const noexcept { return u * capacity_ + v; }
    int add_face(Vertex a, Vertex b, Vertex c);
    void set_face(int f, Vertex a, Vertex b, Vertex c);
    void link_edge(Vertex u, Vertex v);

    int capacity_ = 0;
    int n_ = 0;
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    std::vector<int> face_of_;     // directed edge -> face id, -1 if absent
    std::vector<int> edge_index_;  // directed edge -> index into edges_
};

/// Random Apollonian network: repeated insertion into a uniformly random face, from K4.
Triangulation gen_apollonian(int n, std::uint64_t seed);

/// Apollonian start followed by `flip_attempts` random flip attempts (n^3 by default).
Triangulation gen_planar_triangulation(int n, std::uint64_t seed,
                                       std::optional<std::int64_t> flip_attempts = std::nullopt);

struct OnePlanarGraph {
    Graph graph;
    int planar_edges = 0;  // edges 0..planar_edges-1 come from the triangulation
    /// (added diagonal, the planar edge it crosses)
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
};

/// Topological 1-planar graph: quadrilateral diagonals added to a planar triangulation.
OnePlanarGraph gen_oneplanar_topological(int n, std::uint64_t seed,
                                         std::optional<std::int64_t> flip_attempts = std::nullopt);

struct Point {
    double x;
    double y;
};

/// Random points in the unit square, distinct x, no three collinear (within 1e-12).
std::vector<Point> random_points(int n, Rng& rng);

struct GeometricGraph {
    Graph graph;
    std::vector<Point> points;  // sorted lexicographically; vertex i is points[i]
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    std::vector<int> crossings_per_edge;
};

/// Straight-line graph where every segment is crossed at most k times.
GeometricGraph gen_kplanar_geometric(int n, int k, std::uint64_t seed);

/// Proper intersection of segments p1-p2 and p3-p4 (shared endpoints excluded by caller).
bool segments_cross(const Point& p1, const Point& p2, const Point& p3, const Point& p4) noexcept;

/// Maximum edge count of a k-planar graph used for saturation: 3n-6, 4n-8, 5n-10, 5.5n-11, 6n-12.
double max_kplanar_edges(int n, int k);

/// Random k-tree; vertices are numbered in construction order.
Graph gen_ktree(int n, int k, std::uint64_t seed);

Graph gen_hypercube(int d);
/// Vertex (x, i) has id x*d + i.
Graph gen_ccc(int d);
/// Vertex (a, b) has id a*j + b.
Graph gen_toroidal(int i, int j);
Graph gen_toroidal3(int i, int j, int k);

struct RandomizedGraph {
    Graph graph;
    std::vector<Vertex> relabel;  // relabel[old vertex] = new vertex
};

/// Uniform vertex relabeling with shuffled edge list and adjacency lists.
RandomizedGraph randomize_representation(const Graph& g, std::uint64_t seed);

}  // namespace bookdraw
