#include "bookdraw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bookdraw/combined.hpp"
#include "bookdraw/io.hpp"
#include "bookdraw/rng.hpp"

namespace bookdraw {

namespace {

constexpr const char* kCsvHeader = "graph_id,class,n,m,k,vo_name,pa_name,ls_name,crossings,elapsed_ms,seed";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto at = s.find(sep, start);
        out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (!in || !(in >> std::ws).eof()) throw std::invalid_argument("bad value for " + what + ": '" + text + "'");
    return value;
}

bool parse_bool(const std::string& text, const std::string& what) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw std::invalid_argument("bad value for " + what + ": '" + text + "'");
}

std::vector<int> parse_pages(const std::string& text) {
    std::vector<int> pages;
    for (const auto& part : split(text, ',')) {
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            pages.push_back(parse_number<int>(part, "pages"));
            continue;
        }
        const int lo = parse_number<int>(trim(part.substr(0, dash)), "pages");
        const int hi = parse_number<int>(trim(part.substr(dash + 1)), "pages");
        if (lo > hi) throw std::invalid_argument("bad page range '" + part + "'");
        for (int k = lo; k <= hi; ++k) pages.push_back(k);
    }
    return pages;
}

std::string default_label(const GeneratorSpec& gen) {
    std::string label(class_name(gen.cls));
    switch (gen.cls) {
    case GraphClass::Hypercube:
    case GraphClass::CubeConnectedCycles: return label + "_d" + std::to_string(gen.d);
    case GraphClass::Toroidal: return label + "_" + std::to_string(gen.cycles[0]) + "x" + std::to_string(gen.cycles[1]);
    case GraphClass::Toroidal3:
        return label + "_" + std::to_string(gen.cycles[0]) + "x" + std::to_string(gen.cycles[1]) + "x" +
               std::to_string(gen.cycles[2]);
    default: return label + "_n" + std::to_string(gen.n);
    }
}

const std::string& label_of(const ExperimentSpec& spec, std::size_t index) {
    return spec.graphs[index].label;
}

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

ResultRecord make_record(const ExperimentSpec& spec, std::size_t index, int rep, const Graph& g, const Combo& combo,
                         int k, std::uint64_t seed) {
    const double start = now_ms();
    const BookDrawing d = run_combo(g, combo, k, seed, spec.ls_options);
    const std::int64_t crossings = d.crossings();
    const double elapsed = now_ms() - start;

    ResultRecord r;
    r.graph_id = label_of(spec, index) + "#" + std::to_string(rep);
    r.graph_class = std::string(class_name(spec.graphs[index].gen.cls));
    r.n = g.n();
    r.m = g.m();
    r.k = k;
    r.vo_name = combo.vo;
    r.pa_name = combo.pa;
    r.ls_name = combo.ls;
    r.crossings = crossings;
    r.elapsed_ms = spec.timing ? elapsed : 0.0;
    r.seed = seed;
    return r;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

void Combo::validate() const {
    if (!parse_vo(vo)) throw std::invalid_argument("unknown VO heuristic '" + vo + "'");
    if (!parse_ls(ls)) throw std::invalid_argument("unknown local search '" + ls + "'");
    if (builtin()) {
        if (vo != kConGreedyPlusName) throw std::invalid_argument("only conGreedy+ has a built-in page assignment");
        return;
    }
    if (!parse_pa(pa)) throw std::invalid_argument("unknown PA heuristic '" + pa + "'");
}

std::string Combo::name() const {
    std::string out = builtin() ? vo : vo + "-" + pa;
    if (ls != "none") out += "/" + ls;
    return out;
}

Combo parse_combo(std::string_view name) {
    Combo c;
    std::string_view head = name;
    if (const auto slash = name.find('/'); slash != std::string_view::npos) {
        c.ls = std::string(name.substr(slash + 1));
        head = name.substr(0, slash);
    }
    if (const auto dash = head.find('-'); dash != std::string_view::npos) {
        c.vo = std::string(head.substr(0, dash));
        c.pa = std::string(head.substr(dash + 1));
    } else {
        c.vo = std::string(head);
        c.pa = std::string(kBuiltinPa);
    }
    c.validate();
    return c;
}

std::vector<Combo> all_combos() {
    std::vector<Combo> out;
    for (VoHeuristic v : all_vo_heuristics())
        for (PaHeuristic p : all_pa_heuristics()) out.push_back({std::string(vo_name(v)), std::string(pa_name(p))});
    out.push_back(Combo::con_greedy_plus());
    return out;
}

BookDrawing run_combo(const Graph& g, const Combo& combo, int k, std::uint64_t seed,
                      const LocalSearchOptions& ls_options) {
    combo.validate();
    const std::uint64_t build_seed = derive_seed(seed, {0});
    BookDrawing d;
    if (combo.builtin()) {
        d = con_greedy_plus(g, k, build_seed);
    } else {
        VertexOrder vo = compute_vo(g, *parse_vo(combo.vo), k, build_seed);
        PageAssignment pa = compute_pa(g, vo, k, *parse_pa(combo.pa));
        d = BookDrawing(g, std::move(vo), std::move(pa));
    }
    const LocalSearch ls = *parse_ls(combo.ls);
    if (ls == LocalSearch::None) return d;
    return run_local_search(ls, d, derive_seed(seed, {1}), ls_options).drawing;
}

void ExperimentSpec::validate() const {
    if (graphs.empty()) throw std::invalid_argument("experiment: no graphs");
    if (repetitions < 1) throw std::invalid_argument("experiment: repetitions must be >= 1");
    if (combos.empty()) throw std::invalid_argument("experiment: no heuristic combinations");
    if (!adaptive && pages.empty()) throw std::invalid_argument("experiment: page range is empty and adaptive is off");
    if (threads < 1) throw std::invalid_argument("experiment: threads must be >= 1");
    if (adaptive && (max_pages < 2 || probes.empty()))
        throw std::invalid_argument("experiment: adaptive sweep needs max_pages >= 2 and at least one probe");
    for (int k : pages)
        if (k < 1) throw std::invalid_argument("experiment: page counts must be >= 1");
    std::set<std::string> labels;
    for (const auto& gs : graphs) {
        gs.gen.validate();
        if (gs.label.empty() || gs.label.find_first_of(",#\"\n") != std::string::npos)
            throw std::invalid_argument("experiment: graph label '" + gs.label + "' is empty or has , # \" or newline");
        if (!labels.insert(gs.label).second) throw std::invalid_argument("experiment: duplicate graph label " + gs.label);
    }
    for (const auto& c : combos) c.validate();
    for (const auto& c : probes) c.validate();
    AnnealingSchedule(ls_options.schedule).validate();
    if (ls_options.max_rounds < 1) throw std::invalid_argument("experiment: max_rounds must be >= 1");
}

ExperimentSpec parse_experiment(std::istream& in) {
    ExperimentSpec spec;
    enum class Section { Top, Graph, Combo } section = Section::Top;
    bool combos_set = false;
    std::vector<bool> label_given;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        if (text == "[graph]") {
            section = Section::Graph;
            spec.graphs.emplace_back();
            label_given.push_back(false);
            continue;
        }
        if (text == "[combo]") {
            section = Section::Combo;
            if (!combos_set) spec.combos.clear();
            combos_set = true;
            spec.combos.push_back({"", "", "none"});
            continue;
        }
        if (text.front() == '[') fail("unknown section " + text);
        const auto eq = text.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        try {
            if (section == Section::Graph) {
                auto& gs = spec.graphs.back();
                if (key == "class") {
                    const auto cls = parse_class(value);
                    if (!cls) fail("unknown graph class '" + value + "'");
                    gs.gen.cls = *cls;
                } else if (key == "n") {
                    gs.gen.n = parse_number<int>(value, key);
                } else if (key == "density") {
                    gs.gen.density = parse_number<double>(value, key);
                } else if (key == "k") {
                    gs.gen.k = parse_number<int>(value, key);
                } else if (key == "d") {
                    gs.gen.d = parse_number<int>(value, key);
                } else if (key == "cycles") {
                    const auto parts = split(value, 'x');
                    if (parts.size() < 2 || parts.size() > 3) fail("cycles must look like 16x16 or 4x4x4");
                    for (std::size_t i = 0; i < parts.size(); ++i)
                        gs.gen.cycles[i] = parse_number<int>(parts[i], key);
                } else if (key == "label") {
                    gs.label = value;
                    label_given.back() = true;
                } else {
                    fail("unknown graph key '" + key + "'");
                }
            } else if (section == Section::Combo) {
                auto& c = spec.combos.back();
                if (key == "vo") c.vo = value;
                else if (key == "pa") c.pa = value;
                else if (key == "ls") c.ls = value;
                else fail("unknown combo key '" + key + "'");
            } else if (key == "repetitions") {
                spec.repetitions = parse_number<int>(value, key);
            } else if (key == "seed") {
                spec.master_seed = parse_number<std::uint64_t>(value, key);
            } else if (key == "pages") {
                if (value == "adaptive") {
                    spec.adaptive = true;
                    spec.pages.clear();
                } else {
                    spec.adaptive = false;
                    spec.pages = parse_pages(value);
                }
            } else if (key == "max_pages") {
                spec.max_pages = parse_number<int>(value, key);
            } else if (key == "threshold") {
                spec.adaptive_threshold = parse_number<double>(value, key);
            } else if (key == "probes") {
                spec.probes.clear();
                for (const auto& name : split(value, ',')) spec.probes.push_back(parse_combo(name));
            } else if (key == "combos") {
                spec.combos.clear();
                combos_set = true;
                for (const auto& name : split(value, ',')) {
                    if (name == "all") {
                        for (auto& c : all_combos()) spec.combos.push_back(std::move(c));
                    } else {
                        spec.combos.push_back(parse_combo(name));
                    }
                }
            } else if (key == "threads") {
                spec.threads = parse_number<int>(value, key);
            } else if (key == "timing") {
                spec.timing = parse_bool(value, key);
            } else if (key == "sorted") {
                spec.sorted = parse_bool(value, key);
            } else if (key == "randomize") {
                spec.randomize = parse_bool(value, key);
            } else if (key == "output") {
                spec.output = value;
            } else if (key == "max_rounds") {
                spec.ls_options.max_rounds = parse_number<int>(value, key);
            } else if (key == "sa_iters") {
                spec.ls_options.schedule.iterations = parse_number<int>(value, key);
            } else if (key == "sa_t0") {
                spec.ls_options.schedule.t0 = parse_number<double>(value, key);
            } else if (key == "sa_alpha") {
                spec.ls_options.schedule.alpha = parse_number<double>(value, key);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    for (std::size_t i = 0; i < spec.graphs.size(); ++i)
        if (!label_given[i]) spec.graphs[i].label = default_label(spec.graphs[i].gen);
    for (const auto& c : spec.combos) {
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return spec;
}

ExperimentSpec read_experiment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_experiment(in);
}

std::string ResultRecord::combo_name() const { return Combo{vo_name, pa_name, ls_name}.name(); }

std::string ResultRecord::graph_key() const { return graph_id.substr(0, graph_id.rfind('#')); }

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_record(std::ostream& out, const ResultRecord& r) {
    std::ostringstream line;
    line << r.graph_id << ',' << r.graph_class << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.vo_name << ','
         << r.pa_name << ',' << r.ls_name << ',' << r.crossings << ',' << std::fixed << std::setprecision(3)
         << r.elapsed_ms << ',' << r.seed << '\n';
    out << line.str();
}

std::vector<ResultRecord> read_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) throw ParseError("records: missing or wrong CSV header");
    std::vector<ResultRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 11) throw ParseError("records: line " + std::to_string(lineno) + " has " + std::to_string(f.size()) + " fields");
        try {
            ResultRecord r;
            r.graph_id = f[0];
            r.graph_class = f[1];
            r.n = parse_number<int>(f[2], "n");
            r.m = parse_number<int>(f[3], "m");
            r.k = parse_number<int>(f[4], "k");
            r.vo_name = f[5];
            r.pa_name = f[6];
            r.ls_name = f[7];
            r.crossings = parse_number<std::int64_t>(f[8], "crossings");
            r.elapsed_ms = parse_number<double>(f[9], "elapsed_ms");
            r.seed = parse_number<std::uint64_t>(f[10], "seed");
            if (r.crossings < 0) throw std::invalid_argument("negative crossings");
            out.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw ParseError("records: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Graph experiment_graph(const ExperimentSpec& spec, std::size_t index, int rep) {
    GeneratorSpec gen = spec.graphs[index].gen;
    const auto r = static_cast<std::uint64_t>(rep);
    gen.seed = gen.deterministic() ? 0 : derive_seed(spec.master_seed, {index, r, 0});
    Graph g = generate(gen);
    if (!spec.randomize) return g;
    return randomize_representation(g, derive_seed(spec.master_seed, {index, r, 1})).graph;
}

std::uint64_t run_seed(const ExperimentSpec& spec, std::size_t index, int rep, std::size_t combo, int k) {
    return derive_seed(spec.master_seed,
                       {index, static_cast<std::uint64_t>(rep), 2, combo, static_cast<std::uint64_t>(k)});
}

ResultRecord rerun_cell(const ExperimentSpec& spec, std::size_t index, int rep, std::size_t combo, int k) {
    const Graph g = experiment_graph(spec, index, rep);
    return make_record(spec, index, rep, g, spec.combos[combo], k, run_seed(spec, index, rep, combo, k));
}

std::vector<int> adaptive_page_sweep(const ExperimentSpec& spec, std::size_t index) {
    std::vector<Graph> graphs;
    for (int rep = 0; rep < spec.repetitions; ++rep) graphs.push_back(experiment_graph(spec, index, rep));

    std::vector<int> pages;
    for (int k = 2; k <= spec.max_pages; ++k) {
        pages.push_back(k);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < spec.probes.size(); ++p) {
            double total = 0;
            for (int rep = 0; rep < spec.repetitions; ++rep) {
                const auto seed = derive_seed(spec.master_seed,
                                              {index, static_cast<std::uint64_t>(rep), 3, p, static_cast<std::uint64_t>(k)});
                total += static_cast<double>(
                    run_combo(graphs[static_cast<std::size_t>(rep)], spec.probes[p], k, seed, spec.ls_options).crossings());
            }
            best = std::min(best, total / spec.repetitions);
        }
        if (best < spec.adaptive_threshold) break;
    }
    return pages;
}

std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec, const RecordSink& sink) {
    spec.validate();
    std::vector<std::vector<int>> pages(spec.graphs.size(), spec.pages);
    if (spec.adaptive)
        for (std::size_t i = 0; i < spec.graphs.size(); ++i) pages[i] = adaptive_page_sweep(spec, i);

    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    const std::size_t tasks = spec.graphs.size() * reps;
    std::vector<std::vector<ResultRecord>> per_task(tasks);
    std::vector<ResultRecord> streamed;
    std::mutex emit;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
            try {
                const std::size_t index = t / reps;
                const int rep = static_cast<int>(t % reps);
                const Graph g = experiment_graph(spec, index, rep);
                auto& out = per_task[t];
                for (std::size_t c = 0; c < spec.combos.size(); ++c)
                    for (int k : pages[index]) {
                        out.push_back(make_record(spec, index, rep, g, spec.combos[c], k, run_seed(spec, index, rep, c, k)));
                        if (!spec.sorted) {
                            std::lock_guard lock(emit);
                            if (sink) sink(out.back());
                            streamed.push_back(out.back());
                        }
                    }
            } catch (...) {
                std::lock_guard lock(emit);
                if (!failure) failure = std::current_exception();
                next = tasks;
            }
        }
    };

    const auto count = static_cast<std::size_t>(std::max(1, spec.threads));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < std::min(count, tasks); ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (!spec.sorted) return streamed;

    std::vector<ResultRecord> all;
    for (auto& block : per_task)
        for (auto& r : block) {
            if (sink) sink(r);
            all.push_back(std::move(r));
        }
    return all;
}

Stats compute_stats(std::vector<double> values) {
    Stats s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    const std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
    s.min = values.front();
    s.max = values.back();
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / n);
    return s;
}

std::map<CellKey, Stats> summarize(const std::vector<ResultRecord>& records) {
    std::map<CellKey, std::vector<double>> cells;
    for (const auto& r : records) cells[{r.graph_key(), r.k, r.combo_name()}].push_back(static_cast<double>(r.crossings));
    std::map<CellKey, Stats> out;
    for (auto& [key, values] : cells) out.emplace(key, compute_stats(std::move(values)));
    return out;
}

void write_summary_csv(std::ostream& out, const std::map<CellKey, Stats>& summary) {
    out << "graph,k,combo,count,mean,median,min,max,stddev\n";
    out << std::setprecision(6);
    for (const auto& [key, s] : summary)
        out << key.graph << ',' << key.k << ',' << key.combo << ',' << s.count << ',' << s.mean << ',' << s.median << ','
            << s.min << ',' << s.max << ',' << s.stddev << '\n';
}

std::vector<Tile> tile_diagram(const std::vector<ResultRecord>& records) {
    std::vector<Tile> tiles;
    // Map iteration visits combos of one (graph, k) cell in name order.
    for (const auto& [key, s] : summarize(records)) {
        if (!tiles.empty() && tiles.back().graph == key.graph && tiles.back().k == key.k) {
            Tile& t = tiles.back();
            const double scale = std::max(1.0, std::abs(t.mean));
            if (std::abs(s.mean - t.mean) <= 1e-9 * scale) {
                t.tie = true;
            } else if (s.mean < t.mean) {
                t.combo = key.combo;
                t.mean = s.mean;
                t.tie = false;
            }
            continue;
        }
        tiles.push_back({key.graph, key.k, key.combo, s.mean, false});
    }
    return tiles;
}

void write_tiles_csv(std::ostream& out, const std::vector<Tile>& tiles) {
    out << "graph,k,combo,mean,tie\n" << std::setprecision(6);
    for (const auto& t : tiles) out << t.graph << ',' << t.k << ',' << t.combo << ',' << t.mean << ',' << (t.tie ? 1 : 0) << '\n';
}

void write_tiles_svg(std::ostream& out, const std::vector<Tile>& tiles) {
    std::vector<std::string> graphs;
    std::vector<int> ks;
    std::vector<std::string> combos;
    for (const auto& t : tiles) {
        graphs.push_back(t.graph);
        ks.push_back(t.k);
        combos.push_back(t.combo);
    }
    auto unique_sorted = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    unique_sorted(graphs);
    unique_sorted(ks);
    unique_sorted(combos);
    auto index_of = [](const auto& v, const auto& x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };

    constexpr int cell = 28;
    constexpr int left = 180;
    constexpr int top = 40;
    const int grid_w = cell * static_cast<int>(ks.size());
    const int grid_h = cell * static_cast<int>(graphs.size());
    const int legend_y = top + grid_h + 30;
    const int width = std::max(left + grid_w + 20, 420);
    const int height = legend_y + 20 * static_cast<int>(combos.size()) + 10;
    auto color = [&](int i) {
        const double hue = 360.0 * i / std::max<std::size_t>(1, combos.size());
        std::ostringstream c;
        c << "hsl(" << static_cast<int>(hue) << ",65%,55%)";
        return c.str();
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t j = 0; j < ks.size(); ++j)
        out << "  <text x=\"" << left + cell * static_cast<int>(j) + cell / 2 << "\" y=\"" << top - 8
            << "\" text-anchor=\"middle\">" << ks[j] << "</text>\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out << "  <text x=\"" << left - 6 << "\" y=\"" << top + cell * static_cast<int>(i) + cell / 2 + 4
            << "\" text-anchor=\"end\">" << xml_escape(graphs[i]) << "</text>\n";
    for (const auto& t : tiles) {
        const int x = left + cell * index_of(ks, t.k);
        const int y = top + cell * index_of(graphs, t.graph);
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
            << color(index_of(combos, t.combo)) << "\" stroke=\"white\"><title>" << xml_escape(t.combo)
            << " mean=" << t.mean << (t.tie ? " (tie)" : "") << "</title></rect>\n";
        if (t.tie)
            out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4 << "\" text-anchor=\"middle\">=</text>\n";
    }
    for (std::size_t c = 0; c < combos.size(); ++c) {
        const int y = legend_y + 20 * static_cast<int>(c);
        out << "  <rect x=\"" << left << "\" y=\"" << y << "\" width=\"14\" height=\"14\" fill=\""
            << color(static_cast<int>(c)) << "\"/>\n";
        out << "  <text x=\"" << left + 20 << "\" y=\"" << y + 11 << "\">" << xml_escape(combos[c]) << "</text>\n";
    }
    out << "</svg>\n";
}

std::vector<RelativePoint> relative_lines(const std::vector<ResultRecord>& records, const std::string& baseline,
                                          std::vector<std::string>* warnings) {
    const auto summary = summarize(records);
    std::vector<RelativePoint> out;
    for (const auto& [key, s] : summary) {
        const auto base = summary.find({key.graph, key.k, baseline});
        if (base == summary.end()) continue;
        if (base->second.mean == 0) {
            if (warnings && key.combo == baseline)
                warnings->push_back("baseline mean is 0 for " + key.graph + " at k=" + std::to_string(key.k) +
                                    "; cell omitted");
            continue;
        }
        out.push_back({key.graph, key.k, key.combo, s.mean / base->second.mean});
    }
    return out;
}

void write_relative_csv(std::ostream& out, const std::vector<RelativePoint>& points) {
    out << "graph,k,combo,ratio\n" << std::setprecision(6);
    for (const auto& p : points) out << p.graph << ',' << p.k << ',' << p.combo << ',' << p.ratio << '\n';
}

}  // namespace bookdraw
