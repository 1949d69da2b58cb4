#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bookdraw/generators.hpp"
#include "bookdraw/local_search.hpp"
#include "bookdraw/pa.hpp"
#include "bookdraw/vo.hpp"

namespace bookdraw {

/// Page-assignment name recorded for conGreedy+, which pages its own edges.
inline constexpr std::string_view kBuiltinPa = "builtin";
inline constexpr std::string_view kConGreedyPlusName = "conGreedy+";

/**
 * A heuristic combination: a VO heuristic with a PA heuristic, or conGreedy+
 * with its built-in paging, optionally followed by a local search.
 */
struct Combo {
    std::string vo;
    std::string pa;
    std::string ls = "none";

    /// Throws std::invalid_argument for unknown names.
    void validate() const;
    bool builtin() const { return pa == kBuiltinPa; }
    /// "conGreedy+", "conCro-ceilFloor", "randDFS-eLen/greedy+".
    std::string name() const;

    static Combo con_greedy_plus(std::string ls = "none") { return {std::string(kConGreedyPlusName), std::string(kBuiltinPa), std::move(ls)}; }
    friend bool operator==(const Combo&, const Combo&) = default;
};

/// Parses a combo name as produced by Combo::name().
Combo parse_combo(std::string_view name);

/// Every VO x PA pair plus conGreedy+.
std::vector<Combo> all_combos();

/// Runs one combination. The VO stage and the local search get independent child seeds.
BookDrawing run_combo(const Graph& g, const Combo& combo, int k, std::uint64_t seed,
                      const LocalSearchOptions& ls_options = {});

struct GraphSpec {
    GeneratorSpec gen;
    std::string label;  // defaults to "<class>_n<n>"
};

struct ExperimentSpec {
    std::vector<GraphSpec> graphs;
    int repetitions = 200;
    std::vector<Combo> combos;
    std::vector<int> pages;         // explicit page counts
    bool adaptive = false;          // sweep 2,3,... instead of `pages`
    int max_pages = 20;
    double adaptive_threshold = 10.0;
    std::vector<Combo> probes{Combo::con_greedy_plus(), Combo{"conGreedy", "ceilFloor"}};
    std::uint64_t master_seed = 1;
    int threads = 1;
    bool timing = true;             // false writes elapsed 0 for byte-stable output
    bool sorted = false;            // emit in canonical order after all runs finish
    bool randomize = true;          // shuffle ids and adjacency lists per repetition
    LocalSearchOptions ls_options;
    std::string output;

    /// Throws std::invalid_argument on an unusable spec.
    void validate() const;
};

/// Parses the experiment config text. See the README for the grammar.
ExperimentSpec parse_experiment(std::istream& in);
ExperimentSpec read_experiment_file(const std::string& path);

struct ResultRecord {
    std::string graph_id;
    std::string graph_class;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string vo_name;
    std::string pa_name;
    std::string ls_name;
    std::int64_t crossings = 0;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;

    std::string combo_name() const;
    /// "<class>_n<n>": the row key of summaries and tile diagrams.
    std::string graph_key() const;
};

void write_csv_header(std::ostream& out);
void write_record(std::ostream& out, const ResultRecord& r);
std::vector<ResultRecord> read_records(std::istream& in);

using RecordSink = std::function<void(const ResultRecord&)>;

/// Graph of repetition `rep` of graph spec `index`, after representation shuffling.
Graph experiment_graph(const ExperimentSpec& spec, std::size_t index, int rep);

/// Seed used for combo `combo` at `k` pages on repetition `rep` of graph `index`.
std::uint64_t run_seed(const ExperimentSpec& spec, std::size_t index, int rep, std::size_t combo, int k);

/**
 * Runs every (graph, repetition, combo, page count) cell. Records go to `sink`
 * as they finish (serialized) and are also returned. With spec.sorted they are
 * emitted in (graph, repetition, combo, k) order once all runs are done.
 */
std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec, const RecordSink& sink = {});

/// Reruns the single cell a record came from.
ResultRecord rerun_cell(const ExperimentSpec& spec, std::size_t index, int rep, std::size_t combo, int k);

/**
 * Page counts 2,3,... for graph spec `index`, stopping at the first count where
 * the best probe's mean over all repetitions is below the threshold, or at max_pages.
 */
std::vector<int> adaptive_page_sweep(const ExperimentSpec& spec, std::size_t index);

struct Stats {
    std::size_t count = 0;
    double mean = 0;
    double median = 0;
    double min = 0;
    double max = 0;
    double stddev = 0;  // population
};

Stats compute_stats(std::vector<double> values);

struct CellKey {
    std::string graph;
    int k = 0;
    std::string combo;
    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// Statistics per (graph, k, combo); cells without records are absent.
std::map<CellKey, Stats> summarize(const std::vector<ResultRecord>& records);

struct Tile {
    std::string graph;
    int k = 0;
    std::string combo;
    double mean = 0;
    bool tie = false;
};

/// Best-mean combo per (graph, k); ties go to the lexicographically first name and are flagged.
std::vector<Tile> tile_diagram(const std::vector<ResultRecord>& records);
void write_tiles_csv(std::ostream& out, const std::vector<Tile>& tiles);
void write_tiles_svg(std::ostream& out, const std::vector<Tile>& tiles);

struct RelativePoint {
    std::string graph;
    int k = 0;
    std::string combo;
    double ratio = 0;
};

/// mean(combo) / mean(baseline) per (graph, k). Cells with a zero baseline mean are skipped and reported in `warnings`.
std::vector<RelativePoint> relative_lines(const std::vector<ResultRecord>& records, const std::string& baseline,
                                          std::vector<std::string>* warnings = nullptr);
void write_relative_csv(std::ostream& out, const std::vector<RelativePoint>& points);

void write_summary_csv(std::ostream& out, const std::map<CellKey, Stats>& summary);

}  // namespace bookdraw
