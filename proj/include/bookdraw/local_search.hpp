#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bookdraw/graph.hpp"

namespace bookdraw {

enum class LocalSearch { None, GreedyAlt, GreedyPlus, Annealing };

std::string_view ls_name(LocalSearch ls) noexcept;
std::optional<LocalSearch> parse_ls(std::string_view name) noexcept;

enum class MoveFamily { EdgePage, VertexPosition, AdjacentSwap, Relocation, BestPosition };

/// Every evaluated move, for tracing and auditing.
struct MoveEvent {
    MoveFamily family;
    std::int64_t delta;
    bool accepted;
    double temperature;  // 0 for the greedy searches
    std::int64_t crossings_after;
};

using MoveObserver = std::function<void(const MoveEvent&)>;

struct LocalSearchResult {
    BookDrawing drawing;
    int rounds = 0;  // completed cycles / rounds / iterations
};

/**
 * greedyAlt: alternates vertex rounds (each vertex, in random order, moved to
 * its least-crossing spine position with pages fixed) and edge rounds (each
 * edge, in random order, moved to its least-crossing page). Ties keep the
 * current position or page. Stops after a cycle without improvement or after
 * max_cycles cycles.
 */
LocalSearchResult ls_greedy_alt(const BookDrawing& d, std::uint64_t seed, int max_cycles = 1000,
                                const MoveObserver& observer = {});

/**
 * greedy+: rounds over the vertices in random order; each vertex is lifted
 * off the spine and reinserted at the position where its edges, each put on
 * its best page, cross least. A move is taken only if it strictly improves.
 */
LocalSearchResult ls_greedy_plus(const BookDrawing& d, std::uint64_t seed, int max_rounds = 1000,
                                 const MoveObserver& observer = {});

/**
 * Geometric cooling schedule. Unset fields resolve against the instance:
 * t0 = max(1, crossings/10), alpha such that the last temperature is 1e-3 * t0,
 * edge moves m, adjacent swaps n*ceil(sqrt n), relocations n, and a
 * best-position search with probability min(1, 4/n) per iteration.
 */
struct AnnealingSchedule {
    int iterations = 1000;
    std::optional<double> t0;
    std::optional<double> alpha;
    std::optional<std::int64_t> edge_moves;
    std::optional<std::int64_t> swap_moves;
    std::optional<std::int64_t> relocation_moves;
    std::optional<double> best_position_probability;

    /// Throws std::invalid_argument on iterations < 1, t0 <= 0 or alpha outside (0,1).
    void validate() const;
};

/// The schedule with every field resolved for a concrete drawing.
struct ResolvedSchedule {
    int iterations;
    double t0;
    double alpha;
    std::int64_t edge_moves;
    std::int64_t swap_moves;
    std::int64_t relocation_moves;
    double best_position_probability;
};

ResolvedSchedule resolve_schedule(const AnnealingSchedule& schedule, int n, int m, std::int64_t crossings);

/// Simulated annealing with the four move families; returns the best drawing seen.
LocalSearchResult ls_simulated_annealing(const BookDrawing& d, std::uint64_t seed,
                                         const AnnealingSchedule& schedule = {},
                                         const MoveObserver& observer = {});

struct LocalSearchOptions {
    int max_rounds = 1000;
    AnnealingSchedule schedule;
};

/// Dispatch; LocalSearch::None returns the input unchanged.
LocalSearchResult run_local_search(LocalSearch ls, const BookDrawing& d, std::uint64_t seed,
                                   const LocalSearchOptions& options = {});

}  // namespace bookdraw
