#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookdraw/combined.hpp"
#include "bookdraw/generators.hpp"
#include "bookdraw/harness.hpp"
#include "bookdraw/io.hpp"
#include "bookdraw/local_search.hpp"
#include "bookdraw/oracle.hpp"

namespace fs = std::filesystem;
using namespace bookdraw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSizeGuard = 3;

constexpr const char* kOutDirEnv = "BOOKDRAW_OUTPUT_DIR";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? env : ".";
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_graph(in);
}

template <typename Writer>
void emit(const std::string& path, Writer write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write(out);
    if (!out) throw IoError("write failed: " + path);
}

struct LsFlags {
    std::string ls = "none";
    std::optional<int> sa_iters;
    std::optional<double> sa_t0;
    std::optional<double> sa_alpha;
    std::optional<int> max_rounds;

    void add(CLI::App* cmd) {
        cmd->add_option("--ls", ls, "local search: none, greedyAlt, greedy+, sa");
        cmd->add_option("--sa-iters", sa_iters, "annealing iterations");
        cmd->add_option("--sa-t0", sa_t0, "annealing initial temperature");
        cmd->add_option("--sa-alpha", sa_alpha, "annealing cooling factor");
        cmd->add_option("--max-rounds", max_rounds, "greedy search round limit");
    }

    void apply(LocalSearchOptions& o) const {
        if (sa_iters) o.schedule.iterations = *sa_iters;
        if (sa_t0) o.schedule.t0 = *sa_t0;
        if (sa_alpha) o.schedule.alpha = *sa_alpha;
        if (max_rounds) o.max_rounds = *max_rounds;
    }
};

}  // namespace

// Run parameters and the page counts each graph was run with.
static void write_metadata(const ExperimentSpec& spec, const std::vector<ResultRecord>& records, const std::string& path) {
    nlohmann::ordered_json meta;
    meta["master_seed"] = spec.master_seed;
    meta["repetitions"] = spec.repetitions;
    meta["randomize"] = spec.randomize;
    meta["timing"] = spec.timing;
    meta["sorted"] = spec.sorted;
    meta["combos"] = nlohmann::json::array();
    for (const auto& c : spec.combos) meta["combos"].push_back(c.name());
    if (spec.adaptive) {
        auto& a = meta["adaptive"];
        a["threshold"] = spec.adaptive_threshold;
        a["max_pages"] = spec.max_pages;
        a["probes"] = nlohmann::json::array();
        for (const auto& c : spec.probes) a["probes"].push_back(c.name());
    }
    meta["graphs"] = nlohmann::json::array();
    for (const auto& gs : spec.graphs) {
        std::set<int> pages;
        for (const auto& r : records)
            if (r.graph_key() == gs.label) pages.insert(r.k);
        meta["graphs"].push_back({{"label", gs.label}, {"class", class_name(gs.gen.cls)}, {"pages", pages}});
    }
    std::ofstream out(path);
    out << meta.dump(2) << '\n';
    if (!out) throw IoError("cannot write " + path);
}

int main(int argc, char** argv) {
    CLI::App app{"Book drawing crossing minimization"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a benchmark graph");
    std::string gen_class;
    GeneratorSpec gspec;
    std::string gen_cycles;
    std::string gen_out;
    bool gen_randomize = false;
    gen->add_option("--class", gen_class, "graph class")->required();
    gen->add_option("--n", gspec.n, "vertex count");
    gen->add_option("--density", gspec.density, "a for random-linear, p for random-quadratic");
    gen->add_option("--k", gspec.k, "k-planar cap or k-tree clique size");
    gen->add_option("--d", gspec.d, "hypercube or ccc dimension");
    gen->add_option("--cycles", gen_cycles, "toroidal cycle lengths, e.g. 16x16");
    gen->add_option("--seed", gspec.seed, "seed");
    gen->add_flag("--randomize", gen_randomize, "shuffle ids and adjacency lists");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // draw
    auto* draw = app.add_subcommand("draw", "draw one graph with one heuristic combination");
    std::string draw_graph = "-";
    std::string draw_vo = "conGreedy";
    std::string draw_pa;
    int draw_k = 2;
    std::uint64_t draw_seed = 1;
    std::string draw_out;
    LsFlags draw_ls;
    draw->add_option("graph", draw_graph, "graph file, - for stdin");
    draw->add_option("--vo", draw_vo, "VO heuristic");
    draw->add_option("--pa", draw_pa, "PA heuristic (conGreedy+ defaults to builtin, others to ceilFloor)");
    draw->add_option("--k", draw_k, "pages");
    draw->add_option("--seed", draw_seed, "seed");
    draw->add_option("-o,--out", draw_out, "output file (default stdout)");
    draw_ls.add(draw);

    // exact
    auto* exact = app.add_subcommand("exact", "exact k-page crossing number of a small graph");
    std::string exact_graph = "-";
    int exact_k = 2;
    bool exact_force = false;
    std::string exact_out;
    exact->add_option("graph", exact_graph, "graph file, - for stdin");
    exact->add_option("--k", exact_k, "pages");
    exact->add_flag("--force", exact_force, "lift the size guard");
    exact->add_option("-o,--out", exact_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment config");
    std::string bench_config;
    std::optional<std::uint64_t> bench_seed;
    std::optional<int> bench_reps;
    std::optional<int> bench_threads;
    std::optional<std::string> bench_pages;
    bool bench_sorted = false;
    bool bench_no_timing = false;
    std::string bench_out;
    LsFlags bench_ls;
    bench->add_option("config", bench_config, "experiment config file")->required();
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--reps", bench_reps, "repetitions");
    bench->add_option("--threads", bench_threads, "worker threads");
    bench->add_option("--pages", bench_pages, "page list, range, or adaptive");
    bench->add_flag("--sorted", bench_sorted, "emit records in canonical order");
    bench->add_flag("--no-timing", bench_no_timing, "write 0 for elapsed_ms");
    bench->add_option("-o,--out", bench_out, "CSV output (default $" + std::string(kOutDirEnv) + "/results.csv)");
    bench_ls.add(bench);

    // report
    auto* report = app.add_subcommand("report", "summaries, tile diagram and relative lines from a CSV");
    std::string report_in;
    std::string report_dir;
    std::string report_baseline = "conCro-ceilFloor";
    report->add_option("csv", report_in, "records CSV")->required();
    report->add_option("-d,--out-dir", report_dir, "output directory (default $" + std::string(kOutDirEnv) + ")");
    report->add_option("--baseline", report_baseline, "baseline combo for relative lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            const auto cls = parse_class(gen_class);
            if (!cls) throw std::invalid_argument("unknown graph class '" + gen_class + "'");
            gspec.cls = *cls;
            if (!gen_cycles.empty()) {
                std::istringstream parts(gen_cycles);
                std::string part;
                for (std::size_t i = 0; std::getline(parts, part, 'x'); ++i) {
                    if (i >= 3) throw std::invalid_argument("at most three cycle lengths");
                    gspec.cycles[i] = std::stoi(part);
                }
            }
            Graph g = generate(gspec);
            if (gen_randomize) g = randomize_representation(g, derive_seed(gspec.seed, {1})).graph;
            emit(gen_out, [&](std::ostream& out) { write_graph(out, g); });
        } else if (*draw) {
            const Graph g = load_graph(draw_graph);
            if (draw_pa.empty()) draw_pa = draw_vo == kConGreedyPlusName ? std::string(kBuiltinPa) : "ceilFloor";
            const Combo combo{draw_vo, draw_pa, draw_ls.ls};
            LocalSearchOptions options;
            draw_ls.apply(options);
            if (draw_k < 1) throw std::invalid_argument("--k must be >= 1");
            const BookDrawing d = run_combo(g, combo, draw_k, draw_seed, options);
            emit(draw_out, [&](std::ostream& out) { write_drawing(out, d); });
        } else if (*exact) {
            const Graph g = load_graph(exact_graph);
            const ExactResult r = exact_book_crossing_number(g, exact_k, exact_force);
            emit(exact_out, [&](std::ostream& out) { write_drawing(out, r.witness); });
        } else if (*bench) {
            ExperimentSpec spec;
            {
                std::ifstream in(bench_config);
                if (!in) throw IoError("cannot open " + bench_config);
                spec = parse_experiment(in);
            }
            if (bench_seed) spec.master_seed = *bench_seed;
            if (bench_reps) spec.repetitions = *bench_reps;
            if (bench_threads) spec.threads = *bench_threads;
            if (bench_sorted) spec.sorted = true;
            if (bench_no_timing) spec.timing = false;
            if (bench_pages) {
                std::istringstream line("pages = " + *bench_pages);
                const ExperimentSpec p = parse_experiment(line);
                spec.pages = p.pages;
                spec.adaptive = p.adaptive;
            }
            bench_ls.apply(spec.ls_options);
            if (bench->count("--ls") > 0)
                for (auto& c : spec.combos) c.ls = bench_ls.ls;
            if (!bench_out.empty()) spec.output = bench_out;
            if (spec.output.empty()) spec.output = (fs::path(default_out_dir()) / "results.csv").string();
            spec.validate();

            std::ofstream out(spec.output);
            if (!out) throw IoError("cannot write " + spec.output);
            write_csv_header(out);
            const auto records = run_experiment(spec, [&](const ResultRecord& r) {
                write_record(out, r);
                out.flush();
            });
            if (!out) throw IoError("write failed: " + spec.output);
            std::cerr << records.size() << " records written to " << spec.output << '\n';
            write_metadata(spec, records, spec.output + ".meta.json");
        } else if (*report) {
            std::ifstream in(report_in);
            if (!in) throw IoError("cannot open " + report_in);
            const auto records = read_records(in);
            const fs::path dir = report_dir.empty() ? fs::path(default_out_dir()) : fs::path(report_dir);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec) throw IoError("cannot create " + dir.string());
            const auto tiles = tile_diagram(records);
            std::vector<std::string> warnings;
            const auto lines = relative_lines(records, report_baseline, &warnings);
            emit((dir / "summary.csv").string(), [&](std::ostream& o) { write_summary_csv(o, summarize(records)); });
            emit((dir / "tiles.csv").string(), [&](std::ostream& o) { write_tiles_csv(o, tiles); });
            emit((dir / "tiles.svg").string(), [&](std::ostream& o) { write_tiles_svg(o, tiles); });
            emit((dir / "relative.csv").string(), [&](std::ostream& o) { write_relative_csv(o, lines); });
            for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
        }
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << " (use --force)\n";
        return kExitSizeGuard;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
