#include "bookdraw/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bookdraw {

namespace {

template <typename T>
T expect(std::istream& in, const char* what) {
    T value{};
    if (!(in >> value)) throw ParseError(std::string("expected ") + what);
    return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
    const auto n = expect<long long>(in, "vertex count");
    const auto m = expect<long long>(in, "edge count");
    if (n < 0 || m < 0) throw ParseError("negative graph size");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const auto u = expect<long long>(in, "edge endpoint");
        const auto v = expect<long long>(in, "edge endpoint");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string("edge line ") + std::to_string(i + 1) + ": " + err.what());
        }
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

ParsedDrawing read_drawing(std::istream& in, std::optional<int> k) {
    Graph g = read_graph(in);
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    for (auto& v : order) v = expect<Vertex>(in, "spine vertex");
    std::vector<Page> pages(static_cast<std::size_t>(g.m()));
    for (auto& p : pages) {
        p = expect<Page>(in, "page id");
        if (p < 0) throw ParseError("negative page id");
    }
    const int max_page = pages.empty() ? 0 : *std::max_element(pages.begin(), pages.end());
    const int pages_used = k.value_or(max_page + 1);
    if (pages_used <= max_page) throw ParseError("page id exceeds page count");

    std::optional<std::int64_t> declared;
    std::string word;
    if (in >> word) {
        if (word != "crossings") throw ParseError("unexpected token '" + word + "'");
        declared = expect<std::int64_t>(in, "crossing count");
    }

    try {
        VertexOrder vo(std::move(order));
        PageAssignment pa(std::move(pages), std::max(1, pages_used));
        return {BookDrawing(std::move(g), std::move(vo), std::move(pa)), declared};
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

void write_drawing(std::ostream& out, const BookDrawing& d, bool with_crossings) {
    write_graph(out, d.graph());
    const auto order = d.vo().order();
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
    out << '\n';
    const auto pages = d.pa().pages();
    for (std::size_t i = 0; i < pages.size(); ++i) out << (i ? " " : "") << pages[i];
    out << '\n';
    if (with_crossings) out << "crossings " << d.crossings() << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    write_graph(out, g);
}

}  // namespace bookdraw
