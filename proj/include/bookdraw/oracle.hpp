#pragma once

#include <cstdint>
#include <stdexcept>

#include "bookdraw/graph.hpp"

namespace bookdraw {

/// Raised when an exact solver is asked for an instance above its size limit.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExactMaxVertices = 9;
inline constexpr int kExactMaxEdges = 14;
inline constexpr int kExactPaMaxEdges = 40;

struct ExactResult {
    std::int64_t crossings;
    BookDrawing witness;
};

/**
 * @brief Minimum crossings over all k-page book drawings of g.
 *
 * Orders are enumerated lexicographically with vertex 0 first (crossings do
 * not change under cyclic rotation) and mirror images skipped. Vertices are
 * appended left to right and the edges each one closes are paged on the fly,
 * so the running crossing count is a valid lower bound for every completion.
 * The witness is the lexicographically smallest optimal order.
 *
 * Throws SizeGuardError if n > 9 or m > 14 unless force is set.
 */
ExactResult exact_book_crossing_number(const Graph& g, int k, bool force = false);

struct ExactPaResult {
    std::int64_t crossings;
    PageAssignment pa;
};

/// Optimal page assignment for a fixed spine order. Branch and bound; m <= 40 unless forced.
ExactPaResult exact_pa(const Graph& g, const VertexOrder& vo, int k, bool force = false);

}  // namespace bookdraw
