#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cubex/builders.hpp"
#include "oracles.hpp"

using namespace cubex;

namespace {

// brute-force: D_infty = Z/2 * Z/2 has alternating words, 1 + 2r of length <= r
int dinfty_ball_size(int r) { return 1 + 2 * r; }

}  // namespace

TEST_CASE("racg one vertex: Z/2") {
    GroupBall b = racg_ball(make_defining_graph(1, {}), 1);
    CHECK(b.complex.vertex_count() == 2);
    CHECK(b.complex.edge_count() == 1);
}

TEST_CASE("racg one edge: Z/2 x Z/2 is the full square") {
    GroupBall b = racg_ball(make_defining_graph(2, {{0, 1}}), 2);
    CHECK(b.complex.vertex_count() == 4);
    CHECK(b.complex.hyperplane_count() == 2);
    CHECK(b.complex.dimension() == 2);
}

TEST_CASE("racg two isolated vertices: the infinite dihedral ball is a path") {
    GroupBall b = racg_ball(make_defining_graph(2, {}), 3);
    CHECK(b.complex.vertex_count() == dinfty_ball_size(3));  // 7
    CHECK(b.complex.dimension() == 1);
    CHECK(b.ball_members.count() == 7);  // balls of trees are convex already
}

TEST_CASE("racg identity hyperplanes are transverse iff generators commute") {
    DefiningGraph g = make_defining_graph(3, {{0, 1}});  // edge u-v plus isolated w
    GroupBall b = racg_ball(g, 2);
    auto hyp_at_identity = [&](int v) {
        int e = b.vertex_of(Word{v});
        REQUIRE(e != -1);
        Bitset sep = b.complex.separating_hyperplanes(0, e);
        REQUIRE(sep.count() == 1);
        return static_cast<int>(sep.find_first());
    };
    int ju = hyp_at_identity(0), jv = hyp_at_identity(1), jw = hyp_at_identity(2);
    CHECK(b.complex.transverse(ju, jv));
    CHECK(!b.complex.transverse(ju, jw));
    CHECK(!b.complex.transverse(jv, jw));
}

TEST_CASE("raag one vertex: a Z ball is a path of 5 vertices") {
    GroupBall b = raag_ball(make_defining_graph(1, {}), 2);
    CHECK(b.complex.vertex_count() == 5);
    CHECK(b.complex.dimension() == 1);
}

TEST_CASE("raag one edge: hull of the radius-2 ball in Z^2 is the 5x5 box") {
    GroupBall b = raag_ball(make_defining_graph(2, {{0, 1}}), 2);
    CHECK(b.complex.vertex_count() == 25);
    CHECK(b.complex.hyperplane_count() == 8);
    CHECK(b.complex.dimension() == 2);
    CHECK(b.ball_members.count() == 13);  // 1 + 4 + 8 lattice points
}

TEST_CASE("raag two isolated vertices: the F_2 ball is a tree with 17 vertices") {
    GroupBall b = raag_ball(make_defining_graph(2, {}), 2);
    CHECK(b.complex.vertex_count() == 17);  // 1 + 4 + 12
    CHECK(b.complex.dimension() == 1);
    CHECK(b.complex.edge_count() == 16);
}

TEST_CASE("group balls verify as cube complexes") {
    for (bool coxeter : {true, false}) {
        DefiningGraph g = make_defining_graph(3, {{0, 1}, {1, 2}});
        GroupBall b = coxeter ? racg_ball(g, 3) : raag_ball(g, 2);
        VerifyReport rep = verify_complex(b.complex);
        CHECK(rep.passed);
    }
}

TEST_CASE("shortlex normal forms are canonical") {
    DefiningGraph g = make_defining_graph(3, {{0, 1}, {1, 2}});
    WordOps racg{&g, true};
    CHECK(racg.canon({1, 0}) == Word{0, 1});  // 0 and 1 commute
    CHECK(racg.canon({0, 2}) == Word{0, 2});
    CHECK(racg.canon({2, 0}) == Word{2, 0});  // 0 and 2 do not commute
    CHECK(racg.canon({0, 1, 0}) == Word{1});
    CHECK(racg.canon({0, 0}).empty());

    WordOps raag{&g, false};
    CHECK(raag.canon({1, -1}).empty());
    CHECK(raag.canon({2, 1, -2}) == Word{1});  // letters 1 and 2 commute
    CHECK(raag.canon({-2, 1}) == Word{1, -2});
    CHECK(raag.inverse({1, 2}) == Word{-2, -1});
}

TEST_CASE("graph braid: two tokens on a path of three vertices") {
    BraidComplexResult r = graph_braid_complex(make_defining_graph(3, {{0, 1}, {1, 2}}), 2);
    CHECK(r.base_is_cat0);
    CHECK(r.subdivision_factor == 1);
    CHECK(r.complex.vertex_count() == 3);
    CHECK(r.complex.edge_count() == 2);
    std::set<std::vector<int>> configs(r.configs.begin(), r.configs.end());
    CHECK(configs == std::set<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("graph braid with one token returns the graph or its cover") {
    // one token on a cycle: the complex is the cycle with no squares, so the
    // universal cover (a path) is returned
    DefiningGraph cyc = make_defining_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    BraidComplexResult r = graph_braid_complex(cyc, 1);
    CHECK(!r.base_is_cat0);
    CHECK(verify_complex(r.complex).passed);
    CHECK(r.complex.dimension() == 1);
    CHECK(r.complex.vertex_count() >= 13);  // ball of radius 6 in the line

    // one token on a tree: the tree itself
    DefiningGraph tree = make_defining_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    BraidComplexResult t = graph_braid_complex(tree, 1);
    CHECK(t.base_is_cat0);
    CHECK(t.complex.vertex_count() == 4);
}

TEST_CASE("graph braid: two tokens on the star give a contractible cover ball") {
    DefiningGraph star = make_defining_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    BraidComplexResult r = graph_braid_complex(star, 2);
    // the base complex is a hexagon (not simply connected), so a convex ball
    // of the universal cover comes back
    CHECK(!r.base_is_cat0);
    CHECK(verify_complex(r.complex).passed);
    CHECK(r.complex.dimension() <= 2);
    int squares = 0;
    const CubeComplex& x = r.complex;
    for (int v = 0; v < x.vertex_count(); ++v)
        for (int a : x.neighbors(v))
            for (int b : x.neighbors(v)) {
                if (a >= b || a < v || b < v) continue;
                Bitset sig = x.signature(a) ^ x.signature(b) ^ x.signature(v);
                int w = x.vertex_by_signature(sig);
                if (w != -1 && x.distance_l1(v, w) == 2 && w > v) ++squares;
            }
    CHECK(x.vertex_count() - x.edge_count() + squares == 1);  // contractible
}

TEST_CASE("graph braid subdivision guard") {
    // three tokens on a triangle: cycles must have length >= n+1 = 4
    DefiningGraph tri = make_defining_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    BraidOptions opts;
    opts.auto_subdivide = false;
    CHECK_THROWS_AS(graph_braid_complex(tri, 3, opts), not_subdivided_error);
    BraidComplexResult r = graph_braid_complex(tri, 3);
    CHECK(r.subdivision_factor == 4);
    CHECK(verify_complex(r.complex).passed);
}

TEST_CASE("products") {
    CubeComplex square = product(path_complex(1), path_complex(1));
    CHECK(square.vertex_count() == 4);
    CHECK(square.hyperplane_count() == 2);

    CubeComplex grid = product(path_complex(2), path_complex(2));
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.dimension() == 2);

    CubeComplex tree = CubeComplex::build_from_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CubeComplex prism = product(tree, path_complex(1));
    CHECK(prism.hyperplane_count() == tree.hyperplane_count() + 1);
    CHECK(verify_complex(prism).passed);
    // product distances are sums of factor distances
    for (int u = 0; u < tree.vertex_count(); ++u)
        for (int v = 0; v < tree.vertex_count(); ++v)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    CHECK(prism.distance_l1(u * 2 + s, v * 2 + t) ==
                          tree.distance_l1(u, v) + std::abs(s - t));
}

TEST_CASE("defining graph helpers") {
    DefiningGraph join = make_defining_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(!join.complement_connected());  // C4 is a join of two pairs
    DefiningGraph p3 = make_defining_graph(3, {{0, 1}, {1, 2}});
    CHECK(!p3.complement_connected());    // a path of length 2 is a star, also a join
    DefiningGraph p4 = make_defining_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.complement_connected());
    CHECK(make_defining_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}).max_clique() == 3);
    CHECK_THROWS_AS(make_defining_graph(2, {{0, 0}}), error);
}

TEST_CASE("vertex budget raises RadiusTooLarge") {
    BuildOptions opts;
    opts.vertex_budget = 5;
    CHECK_THROWS_AS(raag_ball(make_defining_graph(2, {}), 3, opts), radius_error);
}

TEST_CASE("staircase fixture") {
    CubeComplex s4 = staircase_complex(4);
    CHECK(verify_complex(s4).passed);
    CHECK(s4.dimension() == 2);
    CHECK(s4.hyperplane_count() == 5);  // 3 vertical + 2 horizontal walls
}
