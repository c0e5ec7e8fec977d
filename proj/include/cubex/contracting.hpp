#pragma once

// Contracting-subcomplex detection (rectangle, grid and join criteria),
// the ball-projection definition, the Ramsey hull bound, the RACG Morse
// criterion, and explicit Morse-failure witnesses.

#include <optional>

#include "cubex/convex.hpp"
#include "cubex/hyperplanes.hpp"

namespace cubex {

struct RectContraction {
    int constant = 0;          // max min(p,q) over rectangles meeting y in the bottom row only
    FlatRectangle witness;
    bool exact = true;
};

RectContraction contraction_constant_rect(const CubeComplex& x, const ConvexSubcomplex& y,
                                          const SearchBudget& budget = {});

// Grid (and join) variants: V crosses y, H avoids crossing y.
JoinSearchResult contraction_constant_grid(const CubeComplex& x, const ConvexSubcomplex& y,
                                           const SearchBudget& budget = {});
JoinSearchResult contraction_constant_join(const CubeComplex& x, const ConvexSubcomplex& y,
                                           const SearchBudget& budget = {});

struct BallProjectionCheck {
    bool ok = true;
    int center = -1, radius = -1, diameter = -1;  // witness when !ok
};

// Every ball disjoint from y must project onto y with diameter <= k.
BallProjectionCheck contracting_ball_check(const CubeComplex& x, const ConvexSubcomplex& y,
                                           int k);

struct HullRadiusResult {
    bool ok = false;
    int measured_quasiconvexity = 0;
    std::int64_t bound = 0;     // ramsey_bound(max(dim+1, k))
    int max_hull_distance = 0;  // max over hull vertices of d(. , s)
};

// Verifies hull(s) lies in the ramsey_bound(max(dim+1,k))-neighborhood of s;
// the quasiconvexity constant is measured and compared against k first.
HullRadiusResult hull_radius_check(const CubeComplex& x, const Bitset& s, int k);

// Morse criterion for the special subgroup generated by lambda: every induced
// square with two diametrically opposite vertices in lambda lies in lambda.
bool racg_special_morse(const DefiningGraph& g, const std::vector<int>& lambda);

struct MorseFailureWitness {
    std::vector<int> path;     // the three-sided detour, endpoints in y
    int height = 0;            // side length of the square it travels around
    int far_distance = 0;      // max over path vertices of d(. , y)
    bool quasigeodesic_ok = false;  // (1/3, 0) parameters verified
};

// Builds the detour path through the rectangle spanned by a thick constrained
// grid; returns nothing when no grid of thinness >= n exists.
std::optional<MorseFailureWitness> morse_failure_witness(const CubeComplex& x,
                                                         const ConvexSubcomplex& y, int n,
                                                         const SearchBudget& budget = {});

// Carrier of a hyperplane as a convex subcomplex.
ConvexSubcomplex carrier_subcomplex(const CubeComplex& x, int j);

// Orders a pairwise-disjoint facing-triple-free family as a chain.
std::vector<int> order_chain(const CubeComplex& x, std::vector<int> family);

}  // namespace cubex
