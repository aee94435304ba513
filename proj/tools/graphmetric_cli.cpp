// Command-line front end: graph generation, distance evaluation, law
// verification, decomposition reports, graphon estimation, distance
// distribution experiments, and canned figure recipes.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input errors.
// With --format json, errors go to stderr as {"error": "..."}.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "graphmetric/graphmetric.hpp"

namespace gm = graphmetric;
using nlohmann::json;

namespace {

// Writes to a file, or stdout when the path is empty or "-".
struct sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw gm::io_error("cannot open " + path + " for writing");
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

std::complex<double> parse_complex(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw gm::parse_error("path function: values must be numbers or [re, im] pairs");
}

// {"constant": v} or {"breakpoints": [0, ..., 1], "values": [v, ...]}
gm::path_function parse_path_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gm::parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw gm::parse_error(path + ": " + e.what());
    }
    if (j.contains("constant")) return gm::path_function::constant(parse_complex(j["constant"]));
    if (j.contains("breakpoints") && j.contains("values")) {
        std::vector<double> breaks;
        for (const auto& b : j["breakpoints"]) {
            if (!b.is_number()) throw gm::parse_error(path + ": breakpoints must be numbers");
            breaks.push_back(b.get<double>());
        }
        std::vector<std::complex<double>> values;
        for (const auto& v : j["values"]) values.push_back(parse_complex(v));
        return gm::path_function::piecewise(std::move(breaks), std::move(values));
    }
    throw gm::parse_error(path + ": expected {\"constant\": v} or {\"breakpoints\", \"values\"}");
}

gm::elemental_metric make_metric(const std::string& name, const std::string& table_path) {
    if (name == "half-absolute") return gm::elemental_metric::half_absolute();
    if (name == "discrete") return gm::elemental_metric::discrete();
    if (name == "table") {
        if (table_path.empty()) throw gm::invalid_parameter("--metric table needs --table FILE");
        return gm::read_table_metric(table_path);
    }
    throw gm::invalid_parameter("unknown metric \"" + name + "\"");
}

gm::joint_metric_space tiled_space(gm::weighted_digraph g, const gm::elemental_metric& proto) {
    std::vector<gm::elemental_metric> metrics(static_cast<std::size_t>(g.size()), proto);
    return gm::joint_metric_space(std::move(g), std::move(metrics));
}

double sample_coordinate(gm::counter_rng& rng, const gm::elemental_metric& m) {
    switch (m.which()) {
    case gm::elemental_metric::kind::discrete:
        return static_cast<double>(rng.next_below(2));
    case gm::elemental_metric::kind::table:
        return static_cast<double>(rng.next_below(static_cast<std::uint64_t>(m.table_size())));
    default:
        return rng.next_double();
    }
}

gm::product_point sample_point(gm::counter_rng& rng, const std::vector<gm::elemental_metric>& metrics) {
    gm::product_point p(metrics.size());
    for (std::size_t i = 0; i < metrics.size(); ++i) p[i] = sample_coordinate(rng, metrics[i]);
    return p;
}

// ---- generate ----

struct generate_options {
    std::string kind;
    int n = 0;
    int rows = 0;
    int cols = 0;
    int k = 0;
    double beta = 0.0;
    int edge_count = 0;
    double weight = 1.0;
    bool upper = false;
    bool closure = false;
};

gm::weighted_digraph build_graph(const generate_options& o, std::uint64_t seed) {
    gm::weighted_digraph g = [&]() -> gm::weighted_digraph {
        if (o.kind == "null") return gm::make_null(o.n);
        if (o.kind == "complete") return gm::make_complete(o.n, o.weight);
        if (o.kind == "star-out") return gm::make_star_out(o.n, o.weight);
        if (o.kind == "star-in") return gm::make_star_in(o.n, o.weight);
        if (o.kind == "chain") return gm::make_chain(o.n, o.weight);
        if (o.kind == "cycle") return gm::make_cycle(o.n, o.weight);
        if (o.kind == "grid2d") return gm::make_grid2d(o.rows, o.cols, o.weight);
        if (o.kind == "watts-strogatz") return gm::make_watts_strogatz(o.n, o.k, o.beta, seed, o.weight);
        if (o.kind == "random-sparse") return gm::make_random_sparse(o.n, o.edge_count, seed, o.weight);
        if (o.kind == "buckyball") return gm::make_buckyball(o.weight);
        throw gm::invalid_parameter("unknown graph kind \"" + o.kind + "\"");
    }();
    if (o.upper) g = gm::upper_directed(g);
    if (o.closure) g = gm::transitive_closure(g);
    return g;
}

// ---- figures ----

struct figure_panel {
    std::string name;
    gm::weighted_digraph graph;
    gm::sample_spec::source src = gm::sample_spec::source::cube_volume;
    bool log_ratio = false;
};

struct figure_recipe {
    std::string headline;
    std::vector<figure_panel> panels;
    std::vector<std::string> notes;
};

figure_recipe make_recipe(const std::string& id, std::uint64_t seed) {
    using src = gm::sample_spec::source;
    figure_recipe r;
    if (id == "1A" || id == "1B" || id == "1C" || id == "1D") {
        r.headline = "distance distribution on the unit cube, four coordinates";
        if (id == "1A") r.panels.push_back({"null4", gm::make_null(4), src::cube_volume, false});
        if (id == "1B") r.panels.push_back({"star4", gm::make_star_out(4), src::cube_volume, false});
        if (id == "1C") r.panels.push_back({"chain4", gm::make_chain(4), src::cube_volume, false});
        if (id == "1D") r.panels.push_back({"complete4", gm::make_complete(4), src::cube_volume, false});
        return r;
    }
    if (id == "2") {
        r.headline = "adding edges one at a time to a three-cycle inside a four-vertex graph";
        std::vector<gm::edge> base = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
        gm::weighted_digraph stage0(4, base);
        std::vector<gm::edge> e1 = base;
        e1.push_back({2, 3, 1.0});
        gm::weighted_digraph stage1(4, e1);
        std::vector<gm::edge> e2 = e1;
        e2.push_back({3, 0, 1.0});
        gm::weighted_digraph stage2(4, e2);
        r.panels.push_back({"null", gm::make_null(4), src::cube_volume, false});
        r.panels.push_back({"full", gm::make_complete(4), src::cube_volume, false});
        r.panels.push_back({"cycle3", stage0, src::cube_volume, false});
        r.panels.push_back({"cycle3_tail", stage1, src::cube_volume, false});
        r.panels.push_back({"cycle4_chord", stage2, src::cube_volume, false});
        r.panels.push_back({"cycle3_ratio", stage0, src::cube_volume, true});
        r.panels.push_back({"cycle3_tail_ratio", stage1, src::cube_volume, true});
        r.panels.push_back({"cycle4_chord_ratio", stage2, src::cube_volume, true});
        return r;
    }
    if (id == "3") {
        r.headline = "log distance ratio separates graphs whose plain distributions look alike";
        r.panels.push_back({"complete3", gm::make_complete(3), src::cube_volume, true});
        r.panels.push_back({"path3", gm::symmetrize(gm::make_chain(3)), src::cube_volume, true});
        r.panels.push_back({"path4", gm::symmetrize(gm::make_chain(4)), src::cube_volume, true});
        r.panels.push_back({"complete4", gm::make_complete(4), src::cube_volume, true});
        return r;
    }
    if (id == "4A" || id == "4B" || id == "4C") {
        r.headline = "exact distance spectrum over all binary vertex pairs, eight coordinates";
        if (id == "4A") r.panels.push_back({"null8", gm::make_null(8), src::cube_vertices, false});
        if (id == "4B")
            r.panels.push_back(
                {"closed_chain8", gm::transitive_closure(gm::make_chain(8)), src::cube_vertices, false});
        if (id == "4C") r.panels.push_back({"star8", gm::make_star_out(8), src::cube_vertices, false});
        r.notes.push_back("binary coordinates make the spectrum exact: every mass sits at a multiple of 1/8");
        return r;
    }
    if (id == "5") {
        r.headline = "log distance ratio for three structured graphs of similar size";
        r.panels.push_back({"random64", gm::make_random_sparse(64, 96, seed), src::cube_volume, true});
        r.panels.push_back({"buckyball", gm::make_buckyball(), src::cube_volume, true});
        r.panels.push_back({"grid8x8", gm::make_grid2d(8, 8), src::cube_volume, true});
        r.notes.push_back("random64 depends on --seed; the other two panels are deterministic");
        return r;
    }
    if (id == "6") {
        r.headline = "small-world rewiring shifts the log distance ratio of a ring lattice";
        r.panels.push_back(
            {"ring", gm::upper_directed(gm::make_watts_strogatz(64, 10, 0.0, seed)), src::cube_volume, true});
        r.panels.push_back({"rewired",
                            gm::upper_directed(gm::make_watts_strogatz(64, 10, 0.025, seed)),
                            src::cube_volume, true});
        r.notes.push_back("rewiring probability 0.025; edges kept in upper triangular orientation");
        return r;
    }
    if (id == "7") {
        r.headline = "orientation matters: symmetric versus upper triangular small-world edges";
        gm::weighted_digraph ws = gm::make_watts_strogatz(32, 4, 0.2, seed);
        r.panels.push_back({"symmetric", ws, src::cube_volume, true});
        r.panels.push_back({"upper", gm::upper_directed(ws), src::cube_volume, true});
        r.notes.push_back("ring degree 4 (the construction needs an even lattice degree)");
        return r;
    }
    throw gm::invalid_parameter("unknown figure id \"" + id +
                                "\" (expected 1A,1B,1C,1D,2,3,4A,4B,4C,5,6,7)");
}

json summary_record(const gm::law_report& rep) {
    json j;
    j["law"] = gm::law_name(rep.which);
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    j["passed"] = rep.passed();
    j["messages"] = rep.messages;
    return j;
}

bool wants_json_errors(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--format=json") return true;
        if (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json") return true;
    }
    return false;
}

void report_error(bool json_errors, const std::string& what) {
    if (json_errors)
        std::cerr << json{{"error", what}}.dump() << '\n';
    else
        std::cerr << "error: " << what << '\n';
}

} // namespace

int main(int argc, char** argv) {
    const bool json_errors = wants_json_errors(argc, argv);

    CLI::App app{"graphmetric: joint metrics on products of metric spaces, parameterized by a weighted digraph"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "text";
    app.add_option("--seed", seed, "base seed for every random draw")->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "output format: text, json; experiment also accepts csv, svg")
        ->capture_default_str();

    // generate
    generate_options gen;
    auto* c_gen = app.add_subcommand("generate", "build a named graph and write it as JSON");
    c_gen->add_option("--kind", gen.kind, "graph family")
        ->required()
        ->check(CLI::IsMember({"null", "complete", "star-out", "star-in", "chain", "cycle", "grid2d",
                               "watts-strogatz", "random-sparse", "buckyball"}));
    c_gen->add_option("--n", gen.n, "vertex count");
    c_gen->add_option("--rows", gen.rows, "grid2d rows");
    c_gen->add_option("--cols", gen.cols, "grid2d columns");
    c_gen->add_option("--k", gen.k, "watts-strogatz lattice degree (even)");
    c_gen->add_option("--beta", gen.beta, "watts-strogatz rewiring probability");
    c_gen->add_option("--edges", gen.edge_count, "random-sparse undirected edge count");
    c_gen->add_option("--weight", gen.weight, "edge weight")->capture_default_str();
    c_gen->add_flag("--upper", gen.upper, "keep only edges from lower to higher index");
    c_gen->add_flag("--closure", gen.closure, "take the transitive closure");

    // dist
    std::string dist_graph, dist_points, dist_metric = "half-absolute", dist_table;
    auto* c_dist = app.add_subcommand("dist", "evaluate the joint distance on point pairs from a file");
    c_dist->add_option("--graph", dist_graph, "graph JSON file")->required();
    c_dist->add_option("--points", dist_points, "CSV of points, consecutive rows are paired")->required();
    c_dist->add_option("--metric", dist_metric, "coordinate metric: half-absolute, discrete, table")
        ->capture_default_str();
    c_dist->add_option("--table", dist_table, "metric table CSV (with --metric table)");

    // verify
    std::string verify_law = "axioms";
    int verify_trials = 1000;
    auto* c_verify = app.add_subcommand("verify", "property-check an algebraic law on random spaces");
    c_verify->add_option("--law", verify_law, "axioms, monotone-edge, monotone-weight, binary-oracle, union, sandwich")
        ->required();
    c_verify->add_option("--trials", verify_trials, "number of random trials")->capture_default_str();

    // union
    std::string u_graph1, u_graph2, u_metric = "half-absolute", u_table;
    int u_pairs = 8;
    auto* c_union = app.add_subcommand("union", "decompose distances on a disjoint union of two graphs");
    c_union->add_option("--graph1", u_graph1, "first graph JSON file")->required();
    c_union->add_option("--graph2", u_graph2, "second graph JSON file")->required();
    c_union->add_option("--metric", u_metric, "coordinate metric")->capture_default_str();
    c_union->add_option("--table", u_table, "metric table CSV");
    c_union->add_option("--pairs", u_pairs, "random point pairs to report")->capture_default_str();

    // product
    std::string p_graph1, p_graph2, p_metric = "half-absolute", p_table;
    int p_pairs = 8;
    auto* c_product = app.add_subcommand("product", "compare the cartesian product distance with its closed form");
    c_product->add_option("--graph1", p_graph1, "first factor graph JSON file")->required();
    c_product->add_option("--graph2", p_graph2, "second factor graph JSON file")->required();
    c_product->add_option("--metric", p_metric, "coordinate metric")->capture_default_str();
    c_product->add_option("--table", p_table, "metric table CSV");
    c_product->add_option("--pairs", p_pairs, "random point pairs to report")->capture_default_str();

    // graphon
    std::string go_graph, go_g, go_h, go_mode = "mc";
    double go_constant = -1.0;
    double go_floor = gm::graphon::default_floor;
    int go_outer = 1024, go_inner = 256, go_resolution = 256;
    auto* c_graphon = app.add_subcommand("graphon", "estimate the continuum distance between two paths");
    // long-only help so the path function options can be named --g and --h
    c_graphon->set_help_flag("--help", "print help and exit");
    c_graphon->add_option("--graph", go_graph, "symmetric graph JSON file, turned into a step kernel");
    c_graphon->add_option("--constant", go_constant, "constant kernel value in (0, 1] instead of --graph");
    c_graphon->add_option("--floor", go_floor, "kernel value standing in for absent edges")
        ->capture_default_str();
    c_graphon->add_option("--g", go_g, "first path function JSON file")->required();
    c_graphon->add_option("--h", go_h, "second path function JSON file")->required();
    c_graphon->add_option("--mode", go_mode, "mc or grid")->check(CLI::IsMember({"mc", "grid"}))
        ->capture_default_str();
    c_graphon->add_option("--outer", go_outer, "outer samples (mc)")->capture_default_str();
    c_graphon->add_option("--inner", go_inner, "inner samples per outer draw (mc)")->capture_default_str();
    c_graphon->add_option("--resolution", go_resolution, "grid points per axis (grid)")->capture_default_str();

    // experiment
    std::string x_graph, x_source = "cube-volume", x_stat = "distance", x_exhaustive = "auto", x_title;
    long long x_pairs = 100000;
    int x_bins = 0;
    auto* c_exp = app.add_subcommand("experiment", "histogram the joint distance over sampled point pairs");
    c_exp->add_option("--graph", x_graph, "graph JSON file")->required();
    c_exp->add_option("--source", x_source, "cube-volume or cube-vertices")
        ->check(CLI::IsMember({"cube-volume", "cube-vertices"}))->capture_default_str();
    c_exp->add_option("--stat", x_stat, "distance or log-ratio")
        ->check(CLI::IsMember({"distance", "log-ratio"}))->capture_default_str();
    c_exp->add_option("--pairs", x_pairs, "sampled point pairs")->capture_default_str();
    c_exp->add_option("--bins", x_bins, "histogram bins (0 picks automatically)")->capture_default_str();
    c_exp->add_option("--exhaustive", x_exhaustive, "auto, on, off: enumerate all vertex pairs instead of sampling")
        ->check(CLI::IsMember({"auto", "on", "off"}))->capture_default_str();
    c_exp->add_option("--title", x_title, "title for svg output");

    // reproduce-figure
    std::string f_id, f_prefix;
    long long f_pairs = 100000;
    int f_bins = 0;
    auto* c_fig = app.add_subcommand("reproduce-figure", "run a canned experiment recipe, writing csv and svg per panel");
    c_fig->add_option("--id", f_id, "1A 1B 1C 1D 2 3 4A 4B 4C 5 6 7")->required();
    c_fig->add_option("--prefix", f_prefix, "output file prefix (default figure_<id>)");
    c_fig->add_option("--pairs", f_pairs, "sampled point pairs per panel")->capture_default_str();
    c_fig->add_option("--bins", f_bins, "histogram bins (0 picks automatically)")->capture_default_str();

    // let the global --seed/--out/--format appear after the subcommand too
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        report_error(json_errors, e.what());
        return 2;
    }

    try {
        if (c_gen->parsed()) {
            gm::weighted_digraph g = build_graph(gen, seed);
            sink s(out_path);
            s.out() << gm::graph_to_json(g).dump(2) << '\n';
            return 0;
        }

        if (c_dist->parsed()) {
            gm::weighted_digraph g = gm::read_graph(dist_graph);
            gm::joint_metric_space space = tiled_space(std::move(g), make_metric(dist_metric, dist_table));
            std::vector<gm::product_point> pts = gm::read_points(dist_points);
            if (pts.size() % 2 != 0)
                throw gm::invalid_parameter("points file must hold an even number of rows (consecutive rows pair up)");
            if (!pts.empty() && static_cast<int>(pts.front().size()) != space.size())
                throw gm::invalid_parameter("points have " + std::to_string(pts.front().size()) +
                                            " coordinates, graph has " + std::to_string(space.size()) +
                                            " vertices");
            std::vector<double> ds;
            for (std::size_t t = 0; t + 1 < pts.size(); t += 2)
                ds.push_back(gm::joint_distance(space, pts[t], pts[t + 1]));
            sink s(out_path);
            if (format == "json") {
                json j;
                j["distances"] = ds;
                s.out() << j.dump(2) << '\n';
            } else {
                for (double d : ds) s.out() << gm::fmt_double(d) << '\n';
            }
            return 0;
        }

        if (c_verify->parsed()) {
            gm::law which = gm::law_from_name(verify_law);
            gm::law_report rep = gm::check_law(which, verify_trials, seed);
            sink s(out_path);
            if (format == "json") {
                s.out() << summary_record(rep).dump(2) << '\n';
            } else {
                s.out() << "law=" << gm::law_name(rep.which) << " trials=" << rep.trials
                        << " failures=" << rep.failures << ' ' << (rep.passed() ? "PASS" : "FAIL") << '\n';
                for (const std::string& m : rep.messages) s.out() << "  " << m << '\n';
            }
            return rep.passed() ? 0 : 1;
        }

        if (c_union->parsed()) {
            gm::weighted_digraph g1 = gm::read_graph(u_graph1);
            gm::weighted_digraph g2 = gm::read_graph(u_graph2);
            gm::elemental_metric proto = make_metric(u_metric, u_table);
            gm::joint_metric_space s1 = tiled_space(std::move(g1), proto);
            gm::joint_metric_space s2 = tiled_space(std::move(g2), proto);
            std::vector<gm::elemental_metric> all(s1.metrics());
            all.insert(all.end(), s2.metrics().begin(), s2.metrics().end());
            if (u_pairs < 1) throw gm::invalid_parameter("--pairs must be positive");
            sink s(out_path);
            json arr = json::array();
            for (int t = 0; t < u_pairs; ++t) {
                gm::counter_rng rng(seed, static_cast<std::uint64_t>(t));
                gm::product_point x = sample_point(rng, all);
                gm::product_point y = sample_point(rng, all);
                gm::union_record rec = gm::union_decomposition(s1, s2, x, y);
                json j{{"lhs", rec.lhs}, {"rhs", rec.rhs}, {"part1", rec.part1}, {"part2", rec.part2}};
                if (format == "json")
                    arr.push_back(j);
                else
                    s.out() << j.dump() << '\n';
            }
            if (format == "json") s.out() << arr.dump(2) << '\n';
            return 0;
        }

        if (c_product->parsed()) {
            gm::weighted_digraph g1 = gm::read_graph(p_graph1);
            gm::weighted_digraph g2 = gm::read_graph(p_graph2);
            gm::elemental_metric proto = make_metric(p_metric, p_table);
            gm::joint_metric_space s1 = tiled_space(std::move(g1), proto);
            gm::joint_metric_space s2 = tiled_space(std::move(g2), proto);
            std::vector<gm::elemental_metric> coords(
                static_cast<std::size_t>(s1.size()) * static_cast<std::size_t>(s2.size()), proto);
            if (p_pairs < 1) throw gm::invalid_parameter("--pairs must be positive");
            sink s(out_path);
            json arr = json::array();
            for (int t = 0; t < p_pairs; ++t) {
                gm::counter_rng rng(seed, static_cast<std::uint64_t>(t));
                gm::product_point x = sample_point(rng, coords);
                gm::product_point y = sample_point(rng, coords);
                gm::product_law_record rec = gm::product_law_report(s1, s2, x, y);
                json j{{"lhs", rec.lhs},
                       {"rhs_as_printed", rec.rhs_as_printed},
                       {"part1", rec.part1},
                       {"part2", rec.part2},
                       {"normalization_used", rec.normalization_used}};
                if (format == "json")
                    arr.push_back(j);
                else
                    s.out() << j.dump() << '\n';
            }
            if (format == "json") s.out() << arr.dump(2) << '\n';
            return 0;
        }

        if (c_graphon->parsed()) {
            if (go_graph.empty() == (go_constant < 0.0))
                throw gm::invalid_parameter("give exactly one of --graph or --constant");
            gm::graphon W = go_graph.empty()
                                ? gm::graphon::constant(go_constant)
                                : gm::graphon::step(gm::read_graph(go_graph), go_floor);
            gm::path_function g = parse_path_function(go_g);
            gm::path_function h = parse_path_function(go_h);
            gm::estimator_config cfg;
            cfg.mode = (go_mode == "grid") ? gm::estimator_mode::grid : gm::estimator_mode::monte_carlo;
            cfg.outer_samples = go_outer;
            cfg.inner_samples = go_inner;
            cfg.grid_resolution = go_resolution;
            cfg.seed = seed;
            gm::graphon_estimate est = gm::graphon_distance(W, g, h, cfg);
            json j;
            j["estimate"] = est.estimate;
            j["std_error"] = est.std_error;
            j["mode"] = (est.mode == gm::estimator_mode::grid) ? "grid" : "monte-carlo";
            j["samples"] = est.samples;
            sink s(out_path);
            s.out() << j.dump(2) << '\n';
            return 0;
        }

        if (c_exp->parsed()) {
            gm::weighted_digraph g = gm::read_graph(x_graph);
            gm::sample_spec spec;
            spec.src = (x_source == "cube-vertices") ? gm::sample_spec::source::cube_vertices
                                                     : gm::sample_spec::source::cube_volume;
            spec.pair_count = x_pairs;
            spec.seed = seed;
            spec.exhaustive = (x_exhaustive == "on")    ? gm::sample_spec::exhaustive_mode::on
                              : (x_exhaustive == "off") ? gm::sample_spec::exhaustive_mode::off
                                                        : gm::sample_spec::exhaustive_mode::automatic;
            gm::joint_metric_space space = gm::experiment_space(g, spec.src);
            gm::distribution_summary sum = (x_stat == "log-ratio")
                                               ? gm::log_distance_ratio_distribution(space, spec, x_bins)
                                               : gm::distance_distribution(space, spec, x_bins);
            std::string fmt = (format == "text") ? "csv" : format;
            if (fmt != "csv" && fmt != "json" && fmt != "svg")
                throw gm::invalid_parameter("experiment --format must be csv, json, or svg");
            if (out_path.empty() || out_path == "-") {
                std::ostringstream buf;
                if (fmt == "csv") gm::write_summary_csv(sum, buf);
                if (fmt == "json") gm::write_summary_json(sum, buf);
                if (fmt == "svg") gm::write_summary_svg(sum, buf, x_title);
                std::cout << buf.str();
            } else {
                gm::export_summary(sum, out_path, fmt, x_title);
            }
            return 0;
        }

        if (c_fig->parsed()) {
            figure_recipe rec = make_recipe(f_id, seed);
            std::string prefix = f_prefix.empty() ? ("figure_" + f_id) : f_prefix;
            std::cout << "figure " << f_id << ": " << rec.headline << '\n';
            for (const std::string& n : rec.notes) std::cout << "  note: " << n << '\n';
            for (const figure_panel& panel : rec.panels) {
                gm::sample_spec spec;
                spec.src = panel.src;
                spec.pair_count = f_pairs;
                spec.seed = seed;
                gm::joint_metric_space space = gm::experiment_space(panel.graph, spec.src);
                gm::distribution_summary sum = panel.log_ratio
                                                   ? gm::log_distance_ratio_distribution(space, spec, f_bins)
                                                   : gm::distance_distribution(space, spec, f_bins);
                std::string base = prefix + "_" + panel.name;
                gm::export_summary(sum, base + ".csv", "csv", "");
                gm::export_summary(sum, base + ".svg", "svg", panel.name);
                std::cout << "  panel " << panel.name << ": n=" << panel.graph.size() << " "
                          << sum.spec << " pairs=" << sum.sample_count
                          << " mean=" << gm::fmt_double(sum.mean) << " -> " << base << ".csv, " << base
                          << ".svg" << '\n';
            }
            return 0;
        }

        report_error(json_errors, "no subcommand given");
        return 2;
    } catch (const gm::io_error& e) {
        report_error(json_errors, e.what());
        return 2;
    } catch (const gm::parse_error& e) {
        report_error(json_errors, e.what());
        return 2;
    } catch (const gm::edit_rejected& e) {
        report_error(json_errors, e.what());
        return 2;
    } catch (const gm::saturated_distance& e) {
        report_error(json_errors, e.what());
        return 2;
    } catch (const gm::invalid_parameter& e) {
        report_error(json_errors, e.what());
        return 2;
    } catch (const std::exception& e) {
        report_error(json_errors, e.what());
        return 2;
    }
}
