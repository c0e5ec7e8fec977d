#include "cubex/report.hpp"

#include <chrono>
#include <random>

namespace cubex {

CubeComplex complex_from_builder(const json& builder) {
    std::string kind = builder.at("kind").get<std::string>();
    if (kind == "racg" || kind == "raag") {
        DefiningGraph g = defining_graph_from_json(builder.at("graph"));
        int r = builder.value("radius", 2);
        return kind == "racg" ? racg_ball(g, r).complex : raag_ball(g, r).complex;
    }
    if (kind == "braid") {
        DefiningGraph g = defining_graph_from_json(builder.at("graph"));
        int n = builder.value("strands", 2);
        BraidOptions opts;
        opts.cover_radius = builder.value("radius", 6);
        return graph_braid_complex(g, n, opts).complex;
    }
    if (kind == "grid") return grid_complex(builder.value("p", 2), builder.value("q", 2));
    if (kind == "path") return path_complex(builder.value("n", 2));
    if (kind == "cube") return hypercube_complex(builder.value("dim", 3));
    if (kind == "staircase") return staircase_complex(builder.value("squares", 4));
    throw error("unknown builder kind: " + kind);
}

namespace {

json analysis_result(const CubeComplex& x, const std::string& name,
                     const SearchBudget& budget) {
    json r;
    r["analysis"] = name;
    if (name == "summary") {
        r["vertices"] = x.vertex_count();
        r["edges"] = x.edge_count();
        r["hyperplanes"] = x.hyperplane_count();
        r["dimension"] = x.dimension();
        r["pass"] = true;
    } else if (name == "verify") {
        VerifyReport v = verify_complex(x);
        r["pass"] = v.passed;
        r["exhaustive_triples"] = v.exhaustive_triples;
        r["exhaustive_pairs"] = v.exhaustive_pairs;
        if (!v.passed) r["failure"] = v.failure;
    } else if (name == "hyperbolicity") {
        RectangleSearch rs = max_flat_rectangle_thickness(x, budget);
        JoinSearchResult join = max_join(x, budget);
        JoinSearchResult grid = max_grid(x, budget);
        FourPointResult fp = four_point_delta(distance_matrix_l1(x));
        LinkSquare link = link_has_induced_4cycle(x);
        r["rectangle_thickness"] = rs.thickness;
        r["rectangle_exact"] = rs.exact;
        if (rs.thickness > 0) {
            json w = json::array();
            for (int v : rs.witness.grid) w.push_back(v);
            r["rectangle_witness"] = w;
        }
        r["join_thinness"] = join.thinness;
        r["grid_thinness"] = grid.thinness;
        r["four_point_twice_delta"] = fp.twice_delta;
        r["four_point_exhaustive"] = fp.exhaustive;
        r["link_square"] = link.found;
        r["pass"] = grid.thinness <= join.thinness;
    } else if (name == "linf") {
        // dual-route identity over all pairs
        bool ok = true;
        for (int u = 0; u < x.vertex_count() && ok; ++u)
            for (int v = u + 1; v < x.vertex_count() && ok; ++v) {
                try {
                    distance_linf(x, u, v);
                } catch (const error&) {
                    ok = false;
                }
            }
        r["pass"] = ok;
    } else if (name == "hx") {
        HxReport hx = hx_model(x, budget);
        r["L_star"] = hx.l_star;
        r["twice_delta"] = hx.four_point.twice_delta;
        r["twice_bound"] = hx.bound_twice;
        r["pass"] = hx.ok;
    } else if (name == "crossing") {
        CutVertexReport cv = cutvertex_crossing_check(x);
        r["crossing_disconnected"] = cv.crossing_disconnected;
        r["has_cut_vertex"] = cv.has_cut_vertex;
        r["pass"] = true;  // the biconditional itself is asserted inside
    } else {
        throw error("unknown analysis: " + name);
    }
    return r;
}

}  // namespace

json run_pipeline(const PipelineConfig& config) {
    json bundle;
    bundle["schema"] = 1;
    json results = json::array();

    CubeComplex x = config.input_path.empty()
                        ? complex_from_builder(config.builder)
                        : complex_from_json(load_json_file(config.input_path));

    for (const auto& name : config.analyses) {
        auto t0 = std::chrono::steady_clock::now();
        json r = analysis_result(x, name, config.budget);
        auto t1 = std::chrono::steady_clock::now();
        if (config.timings)
            r["wall_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        results.push_back(r);
    }
    bundle["results"] = results;
    return bundle;
}

bool bundle_passed(const json& bundle) {
    for (const auto& r : bundle.at("results"))
        if (!r.value("pass", false)) return false;
    return true;
}

std::vector<std::pair<std::string, json>> corpus_generate(const CorpusOptions& opts) {
    std::vector<std::pair<std::string, json>> out;
    std::mt19937_64 rng(opts.seed);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (int i = 0; i < opts.count; ++i) {
        CubeComplex x = path_complex(1);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 32) throw error("corpus_generate: cannot satisfy vertex budget");
            int kind = rnd(0, 4);
            try {
                if (kind == 0) {
                    x = grid_complex(rnd(1, 4), rnd(1, 4));
                } else if (kind == 1) {
                    x = staircase_complex(rnd(1, 6));
                } else if (kind == 2) {
                    // random tree
                    int n = rnd(2, 12);
                    std::vector<std::pair<int, int>> edges;
                    for (int v = 1; v < n; ++v) edges.emplace_back(rnd(0, v - 1), v);
                    x = CubeComplex::build_from_graph(n, edges);
                } else if (kind == 3) {
                    x = product(path_complex(rnd(1, 3)), path_complex(rnd(1, 3)));
                } else {
                    // random defining graph on <= 6 vertices, small racg ball
                    int n = rnd(1, 6);
                    std::vector<std::pair<int, int>> edges;
                    for (int a = 0; a < n; ++a)
                        for (int b = a + 1; b < n; ++b)
                            if (rnd(0, 1)) edges.emplace_back(a, b);
                    x = racg_ball(make_defining_graph(n, edges), rnd(2, 3)).complex;
                }
            } catch (const error&) {
                continue;
            }
            if (x.vertex_count() <= opts.max_vertices) break;
        }
        std::string name = "corpus_" + std::to_string(opts.seed) + "_" + std::to_string(i) +
                           ".json";
        out.emplace_back(name, complex_to_json(x));
    }
    return out;
}

}  // namespace cubex
