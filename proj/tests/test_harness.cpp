#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bookdraw/harness.hpp"
#include "bookdraw/io.hpp"
#include "helpers.hpp"

using namespace bookdraw;

namespace {

ExperimentSpec small_spec() {
    ExperimentSpec s;
    GraphSpec g;
    g.gen.cls = GraphClass::RandomLinear;
    g.gen.n = 20;
    g.gen.density = 2;
    g.label = "rl_n20";
    s.graphs.push_back(g);
    s.repetitions = 5;
    s.combos = {parse_combo("conCro-ceilFloor"), Combo::con_greedy_plus()};
    s.pages = {2, 3, 4};
    s.master_seed = 7;
    s.timing = false;
    s.sorted = true;
    return s;
}

std::string to_csv(const std::vector<ResultRecord>& records) {
    std::ostringstream out;
    write_csv_header(out);
    for (const auto& r : records) write_record(out, r);
    return out.str();
}

ResultRecord record(std::string graph, int k, std::string vo, std::string pa, std::int64_t crossings) {
    ResultRecord r;
    r.graph_id = graph + "#0";
    r.graph_class = "random-linear";
    r.k = k;
    r.vo_name = std::move(vo);
    r.pa_name = std::move(pa);
    r.ls_name = "none";
    r.crossings = crossings;
    return r;
}

// Start and end tags balance and nest; attributes are quoted.
bool well_formed(const std::string& xml) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = xml.find('<', i)) != std::string::npos) {
        const std::size_t end = xml.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = xml.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag.back() == '/') continue;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        stack.push_back(tag.substr(0, tag.find(' ')));
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("combo names") {
    CHECK(Combo::con_greedy_plus().name() == "conGreedy+");
    CHECK(parse_combo("conCro-ceilFloor") == Combo{"conCro", "ceilFloor", "none"});
    CHECK(parse_combo("randDFS-eLen/greedy+") == Combo{"randDFS", "eLen", "greedy+"});
    CHECK(parse_combo("conGreedy+/sa") == Combo::con_greedy_plus("sa"));
    for (const auto& c : all_combos()) CHECK(parse_combo(c.name()) == c);
    CHECK(all_combos().size() == 31);
    CHECK_THROWS_AS(parse_combo("bogus-eLen"), std::invalid_argument);
    CHECK_THROWS_AS(parse_combo("conCro-bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_combo("conCro-eLen/bogus"), std::invalid_argument);
}

TEST_CASE("run_combo matches its parts") {
    Rng rng(1);
    const Graph g = testutil::random_graph(15, 40, rng);
    const auto d = run_combo(g, parse_combo("conGreedy-eLen"), 3, 5);
    CHECK(d.k() == 3);
    CHECK_NOTHROW(d.validate());
    const auto ls = run_combo(g, parse_combo("conGreedy-eLen/greedy+"), 3, 5);
    CHECK(ls.crossings() <= d.crossings());
    CHECK(run_combo(g, Combo::con_greedy_plus(), 3, 5).crossings() == run_combo(g, Combo::con_greedy_plus(), 3, 5).crossings());
}

TEST_CASE("experiment cardinality and columns") {
    const auto spec = small_spec();
    const auto records = run_experiment(spec);
    CHECK(records.size() == 30);
    for (const auto& r : records) {
        CHECK(r.n == 20);
        CHECK(r.m == 40);
        CHECK(r.graph_key() == "rl_n20");
        CHECK(r.elapsed_ms == 0.0);
        if (r.vo_name == "conGreedy+") CHECK(r.pa_name == "builtin");
    }
}

TEST_CASE("reruns are byte identical") {
    auto spec = small_spec();
    const std::string a = to_csv(run_experiment(spec));
    const std::string b = to_csv(run_experiment(spec));
    CHECK(a == b);
    spec.master_seed = 8;
    CHECK(to_csv(run_experiment(spec)) != a);
}

TEST_CASE("sink sees every record") {
    const auto spec = small_spec();
    std::vector<ResultRecord> seen;
    const auto records = run_experiment(spec, [&](const ResultRecord& r) { seen.push_back(r); });
    CHECK(to_csv(seen) == to_csv(records));
}

TEST_CASE("threads do not change sorted output") {
    auto spec = small_spec();
    const std::string one = to_csv(run_experiment(spec));
    spec.threads = 3;
    CHECK(to_csv(run_experiment(spec)) == one);
}

TEST_CASE("a single cell can be rerun") {
    const auto spec = small_spec();
    const auto records = run_experiment(spec);
    // Sorted order is (graph, rep, combo, k).
    const auto& r = records[static_cast<std::size_t>(3 * 2 * 3 + 1 * 3 + 2)];
    REQUIRE(r.graph_id == "rl_n20#3");
    REQUIRE(r.k == 4);
    REQUIRE(r.vo_name == "conGreedy+");
    const auto again = rerun_cell(spec, 0, 3, 1, 4);
    CHECK(again.crossings == r.crossings);
    CHECK(again.seed == r.seed);
    CHECK(again.seed == run_seed(spec, 0, 3, 1, 4));
    const Graph g = experiment_graph(spec, 0, 3);
    CHECK(run_combo(g, Combo::con_greedy_plus(), 4, r.seed).crossings() == r.crossings);
}

TEST_CASE("randomization changes the representation but not the graph") {
    auto spec = small_spec();
    const Graph a = experiment_graph(spec, 0, 0);
    spec.randomize = false;
    const Graph b = experiment_graph(spec, 0, 0);
    CHECK(a.m() == b.m());
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.n(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
}

TEST_CASE("adaptive page sweep") {
    ExperimentSpec s;
    GraphSpec k5;
    k5.gen.cls = GraphClass::RandomQuadratic;
    k5.gen.n = 5;
    k5.gen.density = 1.0;
    s.graphs.push_back(k5);
    s.repetitions = 10;
    s.adaptive = true;
    s.adaptive_threshold = 0.5;
    // K5 needs three pages for zero crossings.
    CHECK(adaptive_page_sweep(s, 0) == std::vector<int>{2, 3});

    GraphSpec dense;
    dense.gen.cls = GraphClass::RandomQuadratic;
    dense.gen.n = 40;
    dense.gen.density = 1.0;
    s.graphs = {dense};
    s.repetitions = 1;
    s.max_pages = 6;
    s.adaptive_threshold = 0.5;
    const auto capped = adaptive_page_sweep(s, 0);
    CHECK(capped == std::vector<int>{2, 3, 4, 5, 6});

    s.max_pages = 20;
    s.adaptive_threshold = 1e9;
    CHECK(adaptive_page_sweep(s, 0) == std::vector<int>{2});
}

TEST_CASE("statistics") {
    const auto s = compute_stats({3, 1, 2});
    CHECK(s.count == 3);
    CHECK(s.mean == doctest::Approx(2));
    CHECK(s.median == doctest::Approx(2));
    CHECK(s.min == 1);
    CHECK(s.max == 3);
    CHECK(s.stddev == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(compute_stats({5}).mean == 5);
    CHECK(compute_stats({1, 2, 3, 4}).median == doctest::Approx(2.5));
    CHECK(compute_stats({}).count == 0);
}

TEST_CASE("summaries omit empty cells") {
    const std::vector<ResultRecord> rs{record("a", 2, "conCro", "eLen", 4), record("a", 2, "conCro", "eLen", 6),
                                       record("a", 3, "conCro", "eLen", 1)};
    const auto sum = summarize(rs);
    CHECK(sum.size() == 2);
    CHECK(sum.at(CellKey{"a", 2, "conCro-eLen"}).mean == doctest::Approx(5));
    CHECK(sum.at(CellKey{"a", 3, "conCro-eLen"}).count == 1);
    CHECK(sum.count(CellKey{"a", 4, "conCro-eLen"}) == 0);
    std::ostringstream out;
    write_summary_csv(out, sum);
    CHECK(out.str().find("conCro-eLen") != std::string::npos);
}

TEST_CASE("tile diagram picks the best mean and flags ties") {
    const std::vector<ResultRecord> rs{record("a", 2, "randDFS", "eLen", 4), record("a", 2, "conCro", "eLen", 4),
                                       record("a", 2, "treeBFS", "slope", 9), record("a", 3, "treeBFS", "slope", 1),
                                       record("a", 3, "conCro", "eLen", 2)};
    const auto tiles = tile_diagram(rs);
    REQUIRE(tiles.size() == 2);
    CHECK(tiles[0].k == 2);
    CHECK(tiles[0].combo == "conCro-eLen");
    CHECK(tiles[0].tie);
    CHECK(tiles[1].combo == "treeBFS-slope");
    CHECK_FALSE(tiles[1].tie);

    const auto single = tile_diagram({record("a", 2, "conCro", "eLen", 4), record("b", 5, "conCro", "eLen", 1)});
    for (const auto& t : single) CHECK(t.combo == "conCro-eLen");

    std::ostringstream csv, svg;
    write_tiles_csv(csv, tiles);
    CHECK(csv.str().find("conCro-eLen") != std::string::npos);
    write_tiles_svg(svg, tiles);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(well_formed(svg.str()));
}

TEST_CASE("relative lines") {
    const std::vector<ResultRecord> rs{record("a", 2, "conCro", "ceilFloor", 4), record("a", 2, "conCro", "eLen", 2),
                                       record("a", 3, "conCro", "ceilFloor", 2), record("a", 3, "conCro", "eLen", 3),
                                       record("a", 4, "conCro", "ceilFloor", 0), record("a", 4, "conCro", "eLen", 0)};
    std::vector<std::string> warnings;
    const auto pts = relative_lines(rs, "conCro-ceilFloor", &warnings);
    CHECK(warnings.size() == 1);
    int baseline_points = 0;
    for (const auto& p : pts) {
        CHECK(p.k != 4);
        if (p.combo == "conCro-ceilFloor") {
            ++baseline_points;
            CHECK(p.ratio == doctest::Approx(1.0));
        }
        if (p.combo == "conCro-eLen" && p.k == 2) CHECK(p.ratio == doctest::Approx(0.5));
        if (p.combo == "conCro-eLen" && p.k == 3) CHECK(p.ratio == doctest::Approx(1.5));
    }
    CHECK(baseline_points == 2);
    std::ostringstream out;
    write_relative_csv(out, pts);
    CHECK_FALSE(out.str().empty());
}

TEST_CASE("csv round trip") {
    auto r = record("x_n5", 2, "conGreedy+", "builtin", 3);
    r.n = 5;
    r.m = 7;
    r.elapsed_ms = 1.25;
    r.seed = 18446744073709551615ULL;
    std::stringstream io;
    write_csv_header(io);
    write_record(io, r);
    const auto back = read_records(io);
    REQUIRE(back.size() == 1);
    CHECK(back[0].graph_id == r.graph_id);
    CHECK(back[0].seed == r.seed);
    CHECK(back[0].elapsed_ms == doctest::Approx(1.25));
    CHECK(back[0].combo_name() == "conGreedy+");
    std::stringstream bad("graph_id,class\nx,y\n");
    CHECK_THROWS(read_records(bad));
}

TEST_CASE("experiment config parsing") {
    std::istringstream in(R"(# demo
repetitions = 3
seed = 42
pages = 2-4, 6
combos = conCro-ceilFloor, conGreedy+/greedy+
threads = 2
timing = false
sorted = true
sa_iters = 50

[graph]
class = toroidal
cycles = 4x5

[graph]
class = ktree
n = 30
k = 3
label = kt
)");
    const auto s = parse_experiment(in);
    CHECK(s.repetitions == 3);
    CHECK(s.master_seed == 42);
    CHECK(s.pages == std::vector<int>{2, 3, 4, 6});
    REQUIRE(s.combos.size() == 2);
    CHECK(s.combos[1] == Combo::con_greedy_plus("greedy+"));
    CHECK(s.threads == 2);
    CHECK_FALSE(s.timing);
    CHECK(s.sorted);
    CHECK(s.ls_options.schedule.iterations == 50);
    REQUIRE(s.graphs.size() == 2);
    CHECK(s.graphs[0].gen.cls == GraphClass::Toroidal);
    CHECK(s.graphs[0].label == "toroidal_4x5");
    CHECK(s.graphs[1].label == "kt");
    CHECK(s.graphs[1].gen.k == 3);

    std::istringstream adaptive("pages = adaptive\ncombos = all\n[graph]\nclass = hypercube\nd = 4\n");
    const auto a = parse_experiment(adaptive);
    CHECK(a.adaptive);
    CHECK(a.combos.size() == all_combos().size());
    CHECK(a.graphs[0].label == "hypercube_d4");
}

TEST_CASE("experiment config errors") {
    for (const char* text : {"repetitions = x\n", "bogus = 1\n", "[graph]\nclass = nope\n", "pages = 3-1\n",
                             "combos = nope\n", "[graph]\nn\n", "[mystery]\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_experiment(in), ParseError);
    }
    ExperimentSpec s = small_spec();
    s.pages.clear();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec();
    s.max_pages = 1;
    s.adaptive = true;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec();
    s.graphs.push_back(s.graphs[0]);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
