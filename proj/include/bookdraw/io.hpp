#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "bookdraw/graph.hpp"

namespace bookdraw {

/// Malformed graph or drawing text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph text:   "n m" then m lines "u v" (0-based ids).
// Drawing text: graph text, a line with the n spine vertices in order, a line
//               with the m page ids in edge order, and optionally "crossings C".

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

struct ParsedDrawing {
    BookDrawing drawing;
    std::optional<std::int64_t> declared_crossings;
};

/// Page count is taken as max(page) + 1 unless `k` is given.
ParsedDrawing read_drawing(std::istream& in, std::optional<int> k = std::nullopt);
void write_drawing(std::ostream& out, const BookDrawing& d, bool with_crossings = true);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace bookdraw
