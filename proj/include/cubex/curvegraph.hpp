#pragma once

// Crossing and contact graphs, quasi-tree certification (bottleneck
// criterion), the delta_L metrics and the hyperbolic model H(X), stability,
// isometry classification, acylindricity on hyperplanes, cone-offs,
// relative-hyperbolicity conditions and the BBF projection axioms.

#include <optional>

#include "cubex/contracting.hpp"
#include "cubex/hyperbolicity.hpp"

namespace cubex {

AuxGraph crossing_graph(const CubeComplex& x);   // edges = transverse pairs
AuxGraph contact_graph(const CubeComplex& x);    // edges = intersecting carriers

struct CutVertexReport {
    bool crossing_disconnected = false;
    bool has_cut_vertex = false;
    int cut_vertex = -1;
};

// Computes both sides of the biconditional independently and asserts it.
CutVertexReport cutvertex_crossing_check(const CubeComplex& x);

struct BottleneckReport {
    bool ok = true;
    int bad_x = -1, bad_y = -1;  // witness pair when !ok
};

// Manning's bottleneck criterion at delta = twice_delta / 2: every pair has a
// geodesic midpoint that all connecting paths approach within delta.
// Midpoints may be edge midpoints; distances are handled in half-units.
BottleneckReport bottleneck_check(const AuxGraph& g, int twice_delta);

// Max pairwise strongly separated family separating two hyperplanes.
int strong_separation_count(const CubeComplex& x, int j, int h);

struct QiPairStats {
    int j = -1, h = -1;
    int d_crossing = 0;
    int d_contact = 0;
    int strong_chain = 0;
};

struct QiReport {
    int max_link_diameter = 0;   // R
    std::vector<QiPairStats> pairs;
    bool lower_ok = true;        // strong_chain >= n implies d_crossing >= n
    bool upper_ok = true;        // d_crossing >= 11 R n implies strong_chain >= n
};

QiReport qi_crossing_contact(const CubeComplex& x, const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// delta_L

// Caches pairwise well-separation degrees; delta_L values are longest chains
// of pairwise disjoint separating hyperplanes whose consecutive pairs have
// degree <= L (separation monotonicity makes consecutive checks sufficient).
class DeltaL {
public:
    DeltaL(const CubeComplex& x, const SearchBudget& budget = {});

    int distance(int u, int v, int L) const;
    DistMatrix matrix(int L) const;
    // max degree over disjoint hyperplane pairs; the stable parameter L*
    int max_disjoint_degree() const;
    int degree(int j, int h) const;  // well-separation degree, cached

private:
    const CubeComplex& x_;
    SearchBudget budget_;
    mutable std::vector<std::vector<int>> degree_;  // -1 = not computed
};

int delta_L(const CubeComplex& x, int u, int v, int L);

// Exhaustive subset search over separating hyperplanes; the reference
// implementation for small complexes.  With require_disjoint = false the
// family may contain transverse pairs (documents the definitional gap).
int delta_L_bruteforce(const CubeComplex& x, int u, int v, int L, bool require_disjoint = true);

struct Delta0ContactReport {
    bool ok = true;
    int max_gap = 0;  // max over pairs of delta_0 - strong chain count
};

// S(J,H) <= delta_0(x,y) <= S(J,H) + 4 over all vertex pairs and all valid
// carrier choices.
Delta0ContactReport delta0_vs_contact(const CubeComplex& x);

struct StabilityReport {
    int l_star = 0;
    bool stable = true;  // delta_{L*} == delta_{L*+1} == delta_{L*+3} pointwise
};

StabilityReport stability_L(const CubeComplex& x, const SearchBudget& budget = {});

struct HxReport {
    int l_star = 0;
    FourPointResult four_point;
    int bound_twice = 0;  // 2 * 9 (L* + 2)
    bool ok = true;       // four_point.twice_delta <= bound_twice
};

HxReport hx_model(const CubeComplex& x, const SearchBudget& budget = {});

// Max additivity defect of delta_L along an l^1 geodesic; throws NotGeodesic.
int quasigeodesic_defect(const CubeComplex& x, int L, const std::vector<int>& geodesic);

// ---------------------------------------------------------------------------
// Isometries of H(X)

enum class IsometryClass { Elliptic, Loxodromic, Inconclusive };

struct IsometryReport {
    IsometryClass cls = IsometryClass::Inconclusive;
    std::optional<SkewerWitness> witness;
    int scale = 0;  // n_max used
};

IsometryReport classify_isometry_hx(const CubeComplex& x, const PartialIsometry& g, int L,
                                    int n_max, const SearchBudget& budget = {});

struct AcylReport {
    bool ok = true;
    int max_stabilizer = 0;
    int witness_j1 = -1, witness_j2 = -1;
    bool boundary_flagged = false;  // some action element is not total
};

// For all hyperplane pairs separated by at least r hyperplanes, the joint
// stabilizer within the action has cardinality at most n.
AcylReport acyl_on_hyperplanes_check(const CubeComplex& x,
                                     const std::vector<PartialIsometry>& action, int r, int n);

// 1-skeleton plus one cone vertex per member joined to all its vertices.
AuxGraph cone_off(const CubeComplex& x, const std::vector<ConvexSubcomplex>& family);

struct RelHypReport {
    int c1 = 0;  // max hyperplanes transverse to two distinct members
    int c2 = 0;  // least c: every c-thick rectangle is c-close to a member
    bool exact = true;
};

RelHypReport relhyp_conditions(const CubeComplex& x,
                               const std::vector<ConvexSubcomplex>& family,
                               const SearchBudget& budget = {});

struct ProjectionAxiomsReport {
    int c1 = 0;            // max projection diameter between distinct members
    int join_constant = 0; // K, max constrained-join constant of the members
    int c2 = 0;            // 2 c1 + K
    bool trichotomy_ok = true;
    int max_far_count = 0; // max #{C : d_C(A,B) > 3 c1} over pairs
};

ProjectionAxiomsReport projection_axioms(const CubeComplex& x,
                                         const std::vector<ConvexSubcomplex>& family,
                                         const SearchBudget& budget = {});

}  // namespace cubex
