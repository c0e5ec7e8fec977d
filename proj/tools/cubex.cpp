// cubex: explore finite CAT(0) cube complexes from the command line.
//
//   cubex build --kind racg --graph g.json --radius 3 --out x.json
//   cubex analyze x.json
//   cubex hyperbolicity x.json [--metric l1|linf|dL --L 2]
//   cubex morse --graph g.json --sub 0,2
//   cubex contracting x.json --subcomplex 0,1,2
//   cubex curve-graph x.json --kind crossing --emit dot
//   cubex hx x.json
//   cubex report --racg g.json -r 3 --all
//   cubex corpus --seed 0 --count 10 --outdir corpus/
//
// CUBEX_BUDGET overrides the search node cap.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cubex/report.hpp"

using namespace cubex;

namespace {

SearchBudget env_budget() {
    SearchBudget b;
    if (const char* s = std::getenv("CUBEX_BUDGET")) b.nodes = std::strtoull(s, nullptr, 10);
    return b;
}

std::vector<int> parse_ids(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

DefiningGraph load_defining_graph(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".dot")
        return defining_graph_from_dot(read_text_file(path));
    return defining_graph_from_json(load_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperplane combinatorics of finite CAT(0) cube complexes"};
    app.require_subcommand(1);
    SearchBudget budget = env_budget();

    // build
    auto* build = app.add_subcommand("build", "build a complex and write it as JSON");
    std::string b_kind = "racg", b_graph, b_out;
    int b_radius = 2, b_strands = 2;
    build->add_option("--kind", b_kind, "racg|raag|braid");
    build->add_option("--graph", b_graph, "defining graph (json or dot)")->required();
    build->add_option("--radius,-r", b_radius, "ball radius / cover radius");
    build->add_option("--strands,-n", b_strands, "braid strand count");
    build->add_option("--out,-o", b_out, "output file")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "verify invariants and print a summary");
    std::string a_in;
    analyze->add_option("complex", a_in)->required();

    // hyperbolicity
    auto* hyp = app.add_subcommand("hyperbolicity", "thickness, thinness and four-point delta");
    std::string h_in, h_metric = "l1";
    int h_L = 0;
    hyp->add_option("complex", h_in)->required();
    hyp->add_option("--metric", h_metric, "l1|linf|dL");
    hyp->add_option("--L", h_L, "well-separation parameter for dL");

    // morse
    auto* morse = app.add_subcommand("morse", "RACG special-subgroup Morse criterion");
    std::string m_graph, m_sub;
    morse->add_option("--graph", m_graph)->required();
    morse->add_option("--sub", m_sub, "comma-separated vertex ids")->required();

    // contracting
    auto* contr = app.add_subcommand("contracting", "contraction constants of a subcomplex");
    std::string c_in, c_sub;
    contr->add_option("complex", c_in)->required();
    contr->add_option("--subcomplex", c_sub, "comma-separated vertex ids")->required();

    // curve-graph
    auto* curve = app.add_subcommand("curve-graph", "crossing or contact graph");
    std::string g_in, g_kind = "crossing", g_emit = "dot";
    curve->add_option("complex", g_in)->required();
    curve->add_option("--kind", g_kind, "crossing|contact");
    curve->add_option("--emit", g_emit, "dot|json");

    // hx
    auto* hx = app.add_subcommand("hx", "stable delta_L model and its hyperbolicity bound");
    std::string x_in;
    hx->add_option("complex", x_in)->required();

    // report
    auto* rep = app.add_subcommand("report", "batch pipeline over one input");
    std::string r_racg, r_raag, r_file;
    int r_radius = 3;
    bool r_all = false, r_timings = false;
    std::vector<std::string> r_analyses;
    rep->add_option("--racg", r_racg, "defining graph for a racg ball");
    rep->add_option("--raag", r_raag, "defining graph for a raag ball");
    rep->add_option("--file", r_file, "complex json");
    rep->add_option("--radius,-r", r_radius);
    rep->add_flag("--all", r_all, "run every analysis");
    rep->add_flag("--timings", r_timings, "include wall times (breaks determinism)");
    rep->add_option("--analysis", r_analyses, "analysis name (repeatable)");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "deterministic complex corpus");
    std::uint64_t s_seed = 0;
    int s_count = 1, s_max = 400;
    std::string s_outdir = ".";
    corpus->add_option("--seed", s_seed);
    corpus->add_option("--count", s_count);
    corpus->add_option("--max-vertices", s_max);
    corpus->add_option("--outdir", s_outdir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            json spec;
            spec["kind"] = b_kind;
            spec["graph"] = defining_graph_to_json(load_defining_graph(b_graph));
            spec["radius"] = b_radius;
            spec["strands"] = b_strands;
            CubeComplex x = complex_from_builder(spec);
            save_json_file(b_out, complex_to_json(x));
            std::cout << "built " << x.vertex_count() << " vertices, " << x.edge_count()
                      << " edges, " << x.hyperplane_count() << " hyperplanes, dimension "
                      << x.dimension() << "\n";
        } else if (*analyze) {
            CubeComplex x = complex_from_json(load_json_file(a_in));
            VerifyReport v = verify_complex(x);
            json out;
            out["vertices"] = x.vertex_count();
            out["edges"] = x.edge_count();
            out["hyperplanes"] = x.hyperplane_count();
            out["dimension"] = x.dimension();
            out["verified"] = v.passed;
            out["exhaustive"] = v.exhaustive_triples && v.exhaustive_pairs;
            std::cout << out.dump(2) << "\n";
            return v.passed ? 0 : 1;
        } else if (*hyp) {
            CubeComplex x = complex_from_json(load_json_file(h_in));
            json out;
            RectangleSearch rs = max_flat_rectangle_thickness(x, budget);
            out["thickness"] = rs.thickness;
            out["join_thinness"] = join_thinness(x, budget);
            out["grid_thinness"] = grid_thinness(x, budget);
            DistMatrix d;
            if (h_metric == "l1")
                d = distance_matrix_l1(x);
            else if (h_metric == "linf")
                d = distance_matrix_linf(x);
            else if (h_metric == "dL")
                d = DeltaL(x, budget).matrix(h_L);
            else
                throw error("unknown metric: " + h_metric);
            FourPointResult fp = four_point_delta(d);
            out["metric"] = h_metric;
            out["twice_delta"] = fp.twice_delta;
            json w = json::array();
            for (int v : fp.witness) w.push_back(v);
            out["delta_witness"] = w;
            out["link_square"] = link_has_induced_4cycle(x).found;
            std::cout << out.dump(2) << "\n";
        } else if (*morse) {
            DefiningGraph g = load_defining_graph(m_graph);
            bool verdict = racg_special_morse(g, parse_ids(m_sub));
            json out;
            out["morse"] = verdict;
            std::cout << out.dump(2) << "\n";
        } else if (*contr) {
            CubeComplex x = complex_from_json(load_json_file(c_in));
            ConvexSubcomplex y = convex_hull(x, parse_ids(c_sub));
            json out;
            RectContraction rc = contraction_constant_rect(x, y, budget);
            out["rect_constant"] = rc.constant;
            out["grid_constant"] = contraction_constant_grid(x, y, budget).thinness;
            out["join_constant"] = contraction_constant_join(x, y, budget).thinness;
            json members = json::array();
            for (int v : y.member_list) members.push_back(v);
            out["subcomplex"] = members;
            std::cout << out.dump(2) << "\n";
        } else if (*curve) {
            CubeComplex x = complex_from_json(load_json_file(g_in));
            AuxGraph g = g_kind == "contact" ? contact_graph(x) : crossing_graph(x);
            if (g_emit == "dot") {
                std::cout << auxgraph_to_dot(g, g_kind);
            } else {
                json out;
                out["nodes"] = g.n;
                json edges = json::array();
                auto sorted = g.edges;
                for (auto& [a, b] : sorted)
                    if (a > b) std::swap(a, b);
                std::sort(sorted.begin(), sorted.end());
                for (auto& [a, b] : sorted) edges.push_back(json::array({a, b}));
                out["edges"] = edges;
                std::cout << out.dump(2) << "\n";
            }
        } else if (*hx) {
            CubeComplex x = complex_from_json(load_json_file(x_in));
            HxReport h = hx_model(x, budget);
            json out;
            out["L_star"] = h.l_star;
            out["twice_delta"] = h.four_point.twice_delta;
            out["twice_bound"] = h.bound_twice;
            out["pass"] = h.ok;
            std::cout << out.dump(2) << "\n";
            return h.ok ? 0 : 1;
        } else if (*rep) {
            PipelineConfig cfg;
            cfg.budget = budget;
            cfg.timings = r_timings;
            if (!r_file.empty()) {
                cfg.input_path = r_file;
            } else if (!r_racg.empty() || !r_raag.empty()) {
                cfg.builder["kind"] = r_racg.empty() ? "raag" : "racg";
                cfg.builder["graph"] = defining_graph_to_json(
                    load_defining_graph(r_racg.empty() ? r_raag : r_racg));
                cfg.builder["radius"] = r_radius;
            } else {
                throw error("report: provide --file, --racg or --raag");
            }
            cfg.analyses = r_all ? std::vector<std::string>{"summary", "verify",
                                                            "hyperbolicity", "linf", "hx",
                                                            "crossing"}
                                 : r_analyses;
            json bundle = run_pipeline(cfg);
            std::cout << bundle.dump(2) << "\n";
            return bundle_passed(bundle) ? 0 : 1;
        } else if (*corpus) {
            CorpusOptions opts;
            opts.seed = s_seed;
            opts.count = s_count;
            opts.max_vertices = s_max;
            for (auto& [name, content] : corpus_generate(opts))
                save_json_file(s_outdir + "/" + name, content);
            std::cout << "wrote " << s_count << " complexes to " << s_outdir << "\n";
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
