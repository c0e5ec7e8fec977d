#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubex/builders.hpp"
#include "cubex/complex.hpp"
#include "oracles.hpp"

using namespace cubex;

TEST_CASE("single edge") {
    CubeComplex x = CubeComplex::build_from_graph(2, {{0, 1}});
    CHECK(x.hyperplane_count() == 1);
    CHECK(x.dimension() == 1);
    CHECK(x.distance_l1(0, 1) == 1);
}

TEST_CASE("4-cycle is one square") {
    CubeComplex x = CubeComplex::build_from_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(x.hyperplane_count() == 2);
    CHECK(x.dimension() == 2);
    CHECK(x.transverse(0, 1));
}

TEST_CASE("3-cube: parallel classes match the coordinate oracle") {
    CubeComplex x = hypercube_complex(3);
    CHECK(x.hyperplane_count() == 3);
    CHECK(x.dimension() == 3);
    // oracle: explicit parallel-class closure on Q3 by coordinate bits
    for (int e = 0; e < x.edge_count(); ++e)
        for (int f = 0; f < x.edge_count(); ++f) {
            auto [a, b] = x.edges()[e];
            auto [c, d] = x.edges()[f];
            int bit_e = a ^ b, bit_f = c ^ d;
            CHECK((x.edge_hyperplane(e) == x.edge_hyperplane(f)) == (bit_e == bit_f));
        }
    CHECK(x.distance_l1(0, 7) == 3);
}

TEST_CASE("verify_median accepts trees and Q3, rejects K_{2,3}") {
    CHECK(verify_median_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}).passed);
    CHECK(verify_median_graph(8, hypercube_complex(3).edges()).passed);

    // K_{2,3}: parts {0,1}, {2,3,4}
    VerifyReport r = verify_median_graph(
        5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(!r.passed);
    CHECK(r.median_count == 2);  // the triple (2,3,4) has medians 0 and 1
}

TEST_CASE("build rejects bad inputs") {
    CHECK_THROWS_AS(CubeComplex::build_from_graph(4, {{0, 1}, {2, 3}}), disconnected_error);
    CHECK_THROWS_AS(CubeComplex::build_from_graph(3, {{0, 1}, {1, 2}, {2, 0}}),
                    not_median_error);
    CHECK_THROWS_AS(
        CubeComplex::build_from_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
        error);
}

TEST_CASE("distances agree with BFS on a 49-vertex grid") {
    CubeComplex x = grid_complex(6, 6);
    REQUIRE(x.vertex_count() == 49);
    auto dist = oracles::all_pairs_bfs(x);
    for (int u = 0; u < x.vertex_count(); ++u)
        for (int v = 0; v < x.vertex_count(); ++v)
            CHECK(x.distance_l1(u, v) == dist[u][v]);
}

TEST_CASE("separating hyperplanes") {
    CubeComplex x = grid_complex(2, 3);
    CHECK(x.separating_hyperplanes(5, 5).none());
    // endpoints of one edge
    auto [a, b] = x.edges()[0];
    CHECK(x.separating_hyperplanes(a, b).count() == 1);
    // opposite corners of [0,2] x [0,3]
    int far = x.vertex_count() - 1;
    CHECK(x.separating_hyperplanes(0, far).count() == 5);
    CHECK(x.distance_l1(0, far) == 5);
}

TEST_CASE("dimension fixtures") {
    CHECK(path_complex(5).dimension() == 1);
    CHECK(grid_complex(3, 3).dimension() == 2);
    // product of three edges = Q3, via the cube enumeration oracle
    CubeComplex q3 = product(product(path_complex(1), path_complex(1)), path_complex(1));
    CHECK(q3.dimension() == 3);
    CHECK(q3.hyperplane_count() == 3);
}

TEST_CASE("medians are unique and lie in all three intervals") {
    CubeComplex x = staircase_complex(5);
    for (int a = 0; a < x.vertex_count(); a += 2)
        for (int b = 0; b < x.vertex_count(); b += 3)
            for (int c = 0; c < x.vertex_count(); c += 2) {
                auto ms = oracles::medians_by_geodesics(x, a, b, c);
                REQUIRE(ms.size() == 1);
                CHECK(x.median(a, b, c) == ms[0]);
            }
}

TEST_CASE("triangle inequality is tight exactly on intervals") {
    CubeComplex x = grid_complex(3, 2);
    for (int a = 0; a < x.vertex_count(); ++a)
        for (int b = 0; b < x.vertex_count(); ++b) {
            Bitset iv = x.interval_bitset(a, b);
            for (int m = 0; m < x.vertex_count(); ++m) {
                bool tight = x.distance_l1(a, m) + x.distance_l1(m, b) == x.distance_l1(a, b);
                CHECK(tight == iv.test(m));
            }
        }
}

TEST_CASE("halfspaces are convex") {
    CubeComplex x = staircase_complex(4);
    for (const auto& h : x.hyperplanes())
        for (const Bitset* side : {&h.halfspace_plus, &h.halfspace_minus}) {
            for (auto u = side->find_first(); u != Bitset::npos; u = side->find_next(u))
                for (auto v = side->find_first(); v != Bitset::npos; v = side->find_next(v)) {
                    Bitset iv = x.interval_bitset(static_cast<int>(u), static_cast<int>(v));
                    CHECK(iv.is_subset_of(*side));
                }
        }
}
