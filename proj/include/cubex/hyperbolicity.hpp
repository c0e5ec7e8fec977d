#pragma once

// Decision procedures for Gromov hyperbolicity: flat-rectangle thickness,
// join/grid thinness, the link condition, biclique thinness of crossing
// graphs, four-point delta estimation, the l^infinity metric, and the
// graph-level applications to Coxeter, braid and Artin groups.

#include "cubex/auxgraph.hpp"
#include "cubex/convex.hpp"
#include "cubex/hyperplanes.hpp"

namespace cubex {

using DistMatrix = std::vector<std::vector<int>>;

DistMatrix distance_matrix_l1(const CubeComplex& x);

struct RectangleSearch {
    int thickness = 0;         // max over flat rectangles of min(p, q)
    FlatRectangle witness;     // a square realising it (empty when 0)
    bool exact = true;
};

// Max k admitting an isometric k x k grid embedding; corner-quadruple search
// justified by the quadruple lemma (four corners with box distances span a
// flat rectangle).
RectangleSearch max_flat_rectangle_thickness(const CubeComplex& x,
                                             const SearchBudget& budget = {});

int join_thinness(const CubeComplex& x, const SearchBudget& budget = {});
int grid_thinness(const CubeComplex& x, const SearchBudget& budget = {});

struct LinkSquare {
    bool found = false;
    int vertex = -1;
    std::array<int, 4> neighbors{-1, -1, -1, -1};  // induced 4-cycle in the link
};

// Link graph of a vertex: nodes are incident edges, adjacency = spanning a
// square.  Returns the first induced 4-cycle found, if any.
LinkSquare link_has_induced_4cycle(const CubeComplex& x);
AuxGraph vertex_link(const CubeComplex& x, int v);

struct BicycleResult {
    int constant = 0;  // max over complete bipartite subgraphs of min(p, q)
    bool exact = true;
};
BicycleResult thin_bicycle_constant(const AuxGraph& g, const SearchBudget& budget = {});

struct FourPointResult {
    int twice_delta = 0;  // metrics are integral, so 2*delta is an integer
    std::array<int, 4> witness{-1, -1, -1, -1};
    bool exhaustive = true;
};

// Smallest delta with d(p,r)+d(q,s) <= max(d(p,q)+d(r,s), d(p,s)+d(q,r)) + 2 delta
// over all vertex quadruples of the given metric.
FourPointResult four_point_delta(const DistMatrix& dist, std::uint64_t quad_budget = 300'000'000,
                                 std::uint64_t seed = 7);

// l^infinity distance, computed two independent ways and cross-checked:
// BFS in the cube-adjacency graph, and the longest chain of pairwise
// disjoint separating hyperplanes.
int distance_linf(const CubeComplex& x, int u, int v);
DistMatrix distance_matrix_linf(const CubeComplex& x);

// Graph-level criteria.
bool graph_has_induced_square(const DefiningGraph& g);
bool meier_racg_hyperbolic(const DefiningGraph& g);    // square-free defining graph
bool braid2_hyperbolic(const DefiningGraph& g);        // no two disjoint cycles
bool raag_acyl_hyperbolic(const DefiningGraph& g);     // >= 2 vertices, not a join

}  // namespace cubex
