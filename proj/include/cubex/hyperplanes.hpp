#pragma once

// Hyperplane-relation vocabulary: facing triples, joins and grids of
// hyperplanes, Ramsey extraction, well-separation degrees, strong separation,
// partial isometries and skewering.

#include <optional>

#include "cubex/builders.hpp"
#include "cubex/complex.hpp"

namespace cubex {

// True iff none of the three separates the other two.
bool facing_triple(const CubeComplex& x, int j1, int j2, int j3);

struct HyperplanePairFamily {
    std::vector<int> h_side;
    std::vector<int> v_side;
    bool grid = false;  // sides pairwise disjoint

    int thinness() const {
        return static_cast<int>(std::min(h_side.size(), v_side.size()));
    }
};

// Checks the join (or grid) invariants of a family.
bool is_join(const CubeComplex& x, const HyperplanePairFamily& f);
bool is_grid(const CubeComplex& x, const HyperplanePairFamily& f);

struct SearchBudget {
    std::uint64_t nodes = 4'000'000;
    int max_candidates = 24;  // per-side cap for subset searches
};

struct JoinSearchResult {
    HyperplanePairFamily family;
    int thinness = 0;
    bool exact = true;  // false when the node budget was hit (lower bound only)
};

// Family maximising min(#H, #V) over all joins (resp. grids), by exact
// branch and bound with symmetry pruning.
JoinSearchResult max_join(const CubeComplex& x, const SearchBudget& budget = {});
JoinSearchResult max_grid(const CubeComplex& x, const SearchBudget& budget = {});

// Constrained variants: members of the V side must cross `v_inside`, members
// of the H side must avoid `h_avoid` (both over hyperplane ids).
JoinSearchResult max_join_constrained(const CubeComplex& x, const Bitset& v_inside,
                                      const Bitset& h_avoid, const SearchBudget& budget = {});
JoinSearchResult max_grid_constrained(const CubeComplex& x, const Bitset& v_inside,
                                      const Bitset& h_avoid, const SearchBudget& budget = {});

// Certified upper bound for the diagonal two-colour Ramsey number.
std::int64_t ramsey_bound(int n);

// Grid subfamily with both sides >= k, when #H, #V >= ramsey_bound(k) and
// k > dim(X); exact maximum-independent-set search in each side.
HyperplanePairFamily extract_grid_from_join(const CubeComplex& x,
                                            const HyperplanePairFamily& join, int k,
                                            const SearchBudget& budget = {});

struct WellSeparation {
    int degree = 0;        // max facing-triple-free family transverse to both
    bool pair_transverse = false;
    bool pair_disjoint = false;
};

WellSeparation well_separation_degree(const CubeComplex& x, int j, int h,
                                      const SearchBudget& budget = {});

bool strongly_separated(const CubeComplex& x, int j, int h);

// Max facing-triple-free subfamily of an explicit candidate set (exact).
int max_facing_triple_free(const CubeComplex& x, const std::vector<int>& candidates,
                           const SearchBudget& budget = {});

// ---------------------------------------------------------------------------

struct PartialIsometry {
    const CubeComplex* parent = nullptr;
    std::vector<int> map;  // -1 outside the domain
    std::string label;

    static PartialIsometry identity(const CubeComplex& x, const std::string& label = "id");

    bool in_domain(int v) const { return map[v] != -1; }
    int apply(int v) const { return map[v]; }
    std::size_t domain_size() const;
    Bitset domain_set() const;

    PartialIsometry inverse() const;
    // (*this) composed after g: v -> this(g(v))
    PartialIsometry after(const PartialIsometry& g) const;
    PartialIsometry power(int n) const;

    // injectivity and distance preservation on the domain
    void validate() const;
};

// Left multiplication by a group element on a group ball, restricted to the
// vertices whose image stays inside the ball.
PartialIsometry left_multiplication(const GroupBall& ball, const Word& g,
                                    const std::string& label = "");

struct SkewerWitness {
    int power = 0;            // n with g^n D1 strictly inside D2
    int j1 = -1, j2 = -1;
    bool d1_plus = false;     // chosen halfspace of j1
    bool d2_plus = false;
};

// Searches |n| <= n_max and the four halfspace orientations for a strict
// nesting chain g^n D1 < D2 < D1.
std::optional<SkewerWitness> skewers(const CubeComplex& x, const PartialIsometry& g, int j1,
                                     int j2, int n_max);

}  // namespace cubex
