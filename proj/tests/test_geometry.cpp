#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubex/builders.hpp"
#include "cubex/convex.hpp"
#include "oracles.hpp"

using namespace cubex;

TEST_CASE("median basics") {
    CubeComplex x = grid_complex(2, 2);
    auto id = [](int i, int j) { return i * 3 + j; };
    CHECK(x.median(id(0, 0), id(0, 0), id(2, 2)) == id(0, 0));
    CHECK(x.median(id(0, 0), id(2, 0), id(0, 2)) == id(0, 0));
}

TEST_CASE("median equals the geodesic-intersection oracle on random triples") {
    CubeComplex x = staircase_complex(6);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, x.vertex_count() - 1);
    for (int t = 0; t < 60; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        auto ms = oracles::medians_by_geodesics(x, a, b, c);
        REQUIRE(ms.size() == 1);
        CHECK(x.median(a, b, c) == ms[0]);
    }
}

TEST_CASE("intervals") {
    CubeComplex sq = grid_complex(1, 1);
    CHECK(sq.interval_bitset(0, 0).count() == 1);
    CHECK(sq.interval_bitset(0, 3).count() == 4);

    CubeComplex x = grid_complex(3, 2);
    auto oracle = oracles::interval_by_geodesics(x, 0, x.vertex_count() - 1);
    Bitset iv = x.interval_bitset(0, x.vertex_count() - 1);
    CHECK(iv.count() == oracle.size());
    for (int v : oracle) CHECK(iv.test(v));
}

TEST_CASE("gate projection") {
    CubeComplex x = grid_complex(3, 3);
    auto id = [](int i, int j) { return i * 4 + j; };
    ConvexSubcomplex bottom =
        convex_hull(x, std::vector<int>{id(0, 0), id(1, 0), id(2, 0), id(3, 0)});
    CHECK(gate_project(x, id(0, 0), bottom) == id(0, 0));
    CHECK(gate_project(x, id(2, 3), bottom) == id(2, 0));  // vertical drop

    // projection of a far subtree onto a branch is the branch point
    CubeComplex tree = CubeComplex::build_from_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    ConvexSubcomplex branch = convex_hull(tree, std::vector<int>{0});
    CHECK(gate_project(tree, 5, branch) == 0);
}

TEST_CASE("project_set: the projection lemma") {
    CubeComplex x = grid_complex(3, 2);
    auto id = [](int i, int j) { return i * 3 + j; };
    ConvexSubcomplex left = convex_hull(x, std::vector<int>{id(0, 0), id(0, 2)});
    ConvexSubcomplex right = convex_hull(x, std::vector<int>{id(3, 0), id(3, 2)});
    ConvexSubcomplex img = project_set(x, left, right);
    CHECK(img.members == right.members);  // full opposite side

    // a subset projects to itself
    ConvexSubcomplex small = convex_hull(x, std::vector<int>{id(3, 0), id(3, 1)});
    ConvexSubcomplex self_img = project_set(x, small, right);
    CHECK(self_img.members == small.members);

    // disjoint branches of a tree project to a single vertex
    CubeComplex tree =
        CubeComplex::build_from_graph(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
    ConvexSubcomplex b1 = convex_hull(tree, std::vector<int>{0, 1});
    ConvexSubcomplex b2 = convex_hull(tree, std::vector<int>{5, 6});
    CHECK(project_set(tree, b1, b2).size() == 1);
}

TEST_CASE("convex hull routes agree and hulls are boxes in grids") {
    CubeComplex x = grid_complex(3, 3);
    auto id = [](int i, int j) { return i * 4 + j; };
    ConvexSubcomplex single = convex_hull(x, std::vector<int>{id(2, 2)});
    CHECK(single.size() == 1);

    ConvexSubcomplex sq = convex_hull(x, std::vector<int>{id(0, 0), id(1, 1)});
    CHECK(sq.size() == 4);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int t = 0; t < 25; ++t) {
        int i1 = pick(rng), j1 = pick(rng), i2 = pick(rng), j2 = pick(rng), i3 = pick(rng),
            j3 = pick(rng);
        ConvexSubcomplex hull =
            convex_hull(x, std::vector<int>{id(i1, j1), id(i2, j2), id(i3, j3)});
        int ilo = std::min({i1, i2, i3}), ihi = std::max({i1, i2, i3});
        int jlo = std::min({j1, j2, j3}), jhi = std::max({j1, j2, j3});
        CHECK(static_cast<int>(hull.size()) == (ihi - ilo + 1) * (jhi - jlo + 1));
    }
}

TEST_CASE("crossing sets count separated pairs") {
    CubeComplex x = grid_complex(2, 2);
    auto id = [](int i, int j) { return i * 3 + j; };
    ConvexSubcomplex row = convex_hull(x, std::vector<int>{id(0, 0), id(2, 0)});
    CHECK(row.crossing.count() == 2);  // the two vertical hyperplanes
}

TEST_CASE("cycle_rectangle") {
    CubeComplex sq = grid_complex(1, 1);
    ConvexSubcomplex a = convex_hull(sq, std::vector<int>{0, 1});
    ConvexSubcomplex b = convex_hull(sq, std::vector<int>{1, 3});
    ConvexSubcomplex c = convex_hull(sq, std::vector<int>{3, 2});
    ConvexSubcomplex d = convex_hull(sq, std::vector<int>{2, 0});
    auto res = cycle_rectangle(sq, a, b, c, d);
    CHECK(res.rect.p == 1);
    CHECK(res.rect.q == 1);

    CubeComplex g = grid_complex(3, 3);
    auto id = [](int i, int j) { return i * 4 + j; };
    ConvexSubcomplex bottom = convex_hull(g, std::vector<int>{id(0, 0), id(3, 0)});
    ConvexSubcomplex right = convex_hull(g, std::vector<int>{id(3, 0), id(3, 3)});
    ConvexSubcomplex top = convex_hull(g, std::vector<int>{id(0, 3), id(3, 3)});
    ConvexSubcomplex left = convex_hull(g, std::vector<int>{id(0, 0), id(0, 3)});
    auto full = cycle_rectangle(g, bottom, right, top, left);
    CHECK(full.rect.p == 3);
    CHECK(full.rect.q == 3);

    // degenerate cycle at one vertex
    ConvexSubcomplex pt = convex_hull(g, std::vector<int>{id(1, 1)});
    auto degen = cycle_rectangle(g, pt, pt, pt, pt);
    CHECK(degen.rect.p == 0);
    CHECK(degen.rect.q == 0);

    ConvexSubcomplex far = convex_hull(g, std::vector<int>{id(3, 3)});
    CHECK_THROWS_AS(cycle_rectangle(g, pt, far, pt, far), not_a_cycle_error);
}

TEST_CASE("quadruple_grid") {
    CubeComplex g = grid_complex(3, 2);
    auto id = [](int i, int j) { return i * 3 + j; };

    // all inputs equal: degenerate
    auto degen = quadruple_grid(g, id(1, 1), id(1, 1), id(1, 1), id(1, 1));
    CHECK(degen.side_h == 0);
    CHECK(degen.side_v == 0);

    // the four corners of the grid are their own witnesses
    auto full = quadruple_grid(g, id(0, 0), id(3, 0), id(3, 2), id(0, 2));
    CHECK(full.m[0] == id(0, 0));
    CHECK(full.m[1] == id(3, 0));
    CHECK(full.m[2] == id(3, 2));
    CHECK(full.m[3] == id(0, 2));
    CHECK(full.side_h == 3);
    CHECK(full.side_v == 2);

    // tree quadruples give degenerate rectangles
    CubeComplex tree =
        CubeComplex::build_from_graph(8, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {0, 6}, {6, 7}});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, tree.vertex_count() - 1);
    for (int t = 0; t < 20; ++t) {
        auto q = quadruple_grid(tree, pick(rng), pick(rng), pick(rng), pick(rng));
        CHECK(std::min(q.side_h, q.side_v) == 0);
    }
}

TEST_CASE("projection lemmas on random subcomplex pairs") {
    CubeComplex x = staircase_complex(5);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(0, x.vertex_count() - 1);
    for (int t = 0; t < 30; ++t) {
        ConvexSubcomplex c = convex_hull(x, std::vector<int>{pick(rng), pick(rng)});
        int u = pick(rng), v = pick(rng);
        int gu = gate_project(x, u, c), gv = gate_project(x, v, c);
        // separation of projections
        Bitset lhs = x.separating_hyperplanes(gu, gv);
        Bitset rhs = x.separating_hyperplanes(u, v) & c.crossing;
        CHECK(lhs == rhs);
    }
    // two minima + composition
    for (int t = 0; t < 30; ++t) {
        ConvexSubcomplex y1 = convex_hull(x, std::vector<int>{pick(rng), pick(rng)});
        ConvexSubcomplex y2 = convex_hull(x, std::vector<int>{pick(rng), pick(rng)});
        int bu = -1, bv = -1, bd = -1;
        for (int u : y1.member_list)
            for (int v : y2.member_list)
                if (bd == -1 || x.distance_l1(u, v) < bd) {
                    bd = x.distance_l1(u, v);
                    bu = u;
                    bv = v;
                }
        Bitset sep = x.separating_hyperplanes(bu, bv);
        for (auto j = sep.find_first(); j != Bitset::npos; j = sep.find_next(j)) {
            // separates the whole subcomplexes
            const auto& h = x.hyperplane(static_cast<int>(j));
            bool y1_plus = y1.members.is_subset_of(h.halfspace_plus);
            bool y1_minus = y1.members.is_subset_of(h.halfspace_minus);
            bool y2_plus = y2.members.is_subset_of(h.halfspace_plus);
            bool y2_minus = y2.members.is_subset_of(h.halfspace_minus);
            CHECK(((y1_plus && y2_minus) || (y1_minus && y2_plus)));
        }
        if ((y1.members & y2.members).any()) {
            ConvexSubcomplex both = as_convex(x, y1.members & y2.members);
            for (int t2 = 0; t2 < 8; ++t2) {
                int u = pick(rng);
                CHECK(gate_project(x, gate_project(x, u, y2), y1) ==
                      gate_project(x, u, both));
            }
        }
    }
}
