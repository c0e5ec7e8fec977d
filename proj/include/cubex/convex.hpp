#pragma once

// Medians, intervals, gate projections, convex hulls, and the two
// constructive results on cycles of subcomplexes and vertex quadruples.

#include "cubex/complex.hpp"

namespace cubex {

// A gated (convex) set of vertices together with its crossing set, the
// hyperplanes separating at least two of its vertices.
struct ConvexSubcomplex {
    const CubeComplex* parent = nullptr;
    Bitset members;                // over vertices
    std::vector<int> member_list;  // sorted
    Bitset crossing;               // over hyperplanes

    bool contains(int v) const { return members.test(v); }
    bool empty() const { return members.none(); }
    std::size_t size() const { return members.count(); }
};

// Hull of an arbitrary nonempty vertex set, computed two independent ways
// (halfspace intersection and iterated interval closure) and cross-checked.
ConvexSubcomplex convex_hull(const CubeComplex& x, const Bitset& seed);
ConvexSubcomplex convex_hull(const CubeComplex& x, const std::vector<int>& seed);

// Wraps an already-convex vertex set; throws if the set is not convex.
ConvexSubcomplex as_convex(const CubeComplex& x, const Bitset& members);

// Unique nearest member of c; checks the gate property on every call.
int gate_project(const CubeComplex& x, int v, const ConvexSubcomplex& c);

// Pointwise projection image; asserts it is a geodesic subcomplex of b whose
// crossing set is crossing(a) & crossing(b).
ConvexSubcomplex project_set(const CubeComplex& x, const ConvexSubcomplex& a,
                             const ConvexSubcomplex& b);

// Interval I(x,y) as a subcomplex (intervals are convex).
ConvexSubcomplex interval_subcomplex(const CubeComplex& x, int u, int v);

// Deterministic geodesic from u to v: smallest-signature neighbor first.
std::vector<int> canonical_geodesic(const CubeComplex& x, int u, int v);

// Multi-source BFS distances to a vertex set.
std::vector<int> distances_to_set(const CubeComplex& x, const Bitset& set);

struct FlatRectangle {
    int p = 0, q = 0;
    std::vector<int> grid;  // (p+1) x (q+1), row-major in i

    int at(int i, int j) const { return grid[static_cast<std::size_t>(i) * (q + 1) + j]; }
    int& at(int i, int j) { return grid[static_cast<std::size_t>(i) * (q + 1) + j]; }
    Bitset vertex_set(const CubeComplex& x) const;
    // d(f(i,j), f(i',j')) == |i-i'| + |j-j'| over all grid pairs.
    bool is_isometric(const CubeComplex& x) const;
};

// Rectangle with the given corners, built by median interpolation along
// canonical geodesics corner00 -> corner10 and corner00 -> corner01.
FlatRectangle rectangle_from_corners(const CubeComplex& x, int c00, int c10, int c11, int c01);

struct CycleRectangleResult {
    FlatRectangle rect;
    int base_vertex = -1;  // the chosen corner a in A and D
};

// The flat rectangle spanned by a cycle of four convex subcomplexes:
// bottom in a, right in b, top in c, left in d.  Verifies the embedding and
// the disjointness clause (bottom-side hyperplanes avoid b and d).
CycleRectangleResult cycle_rectangle(const CubeComplex& x, const ConvexSubcomplex& a,
                                     const ConvexSubcomplex& b, const ConvexSubcomplex& c,
                                     const ConvexSubcomplex& d);

struct QuadrupleGrid {
    std::array<int, 4> m{};        // projections of the inputs onto the Helly core
    FlatRectangle rect;            // corners m1 m2 m3 m4
    int side_h = 0;                // = #hyperplanes separating {x1,x2} | {x3,x4}
    int side_v = 0;                // = #hyperplanes separating {x1,x4} | {x2,x3}
};

// The median quadruple construction: four inner vertices spanning a flat
// rectangle, with all stated interval containments verified.
QuadrupleGrid quadruple_grid(const CubeComplex& x, int x1, int x2, int x3, int x4);

}  // namespace cubex
