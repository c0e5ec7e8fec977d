#pragma once

// Core representation of a finite CAT(0) cube complex: a median graph with
// extracted hyperplanes (theta-classes of edges) and per-vertex halfspace
// signatures.  Everything downstream (projections, joins/grids, the delta_L
// metrics) is computed from the signatures.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cubex {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct bitset_hash {
    std::size_t operator()(const Bitset& b) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        std::vector<std::uint64_t> blocks(b.num_blocks());
        boost::to_block_range(b, blocks.begin());
        for (std::uint64_t w : blocks) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

// ---------------------------------------------------------------------------
// Errors

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct disconnected_error : error { using error::error; };
struct not_median_error : error { using error::error; };
struct inconsistent_halfspace_error : error { using error::error; };
struct radius_error : error { using error::error; };           // RadiusTooLarge
struct budget_error : error { using error::error; };
struct empty_subcomplex_error : error { using error::error; };
struct not_a_cycle_error : error { using error::error; };
struct not_distinct_error : error { using error::error; };
struct too_small_error : error { using error::error; };
struct domain_too_small_error : error { using error::error; };
struct not_geodesic_error : error { using error::error; };
struct not_quasiconvex_error : error { using error::error; };
struct not_induced_error : error { using error::error; };
struct not_subdivided_error : error { using error::error; };
struct no_thick_grid_error : error { using error::error; };

// ---------------------------------------------------------------------------

struct Hyperplane {
    int id = -1;
    std::vector<int> edge_class;   // indices into CubeComplex::edges()
    Bitset halfspace_plus;         // vertices whose signature bit is set
    Bitset halfspace_minus;
    Bitset carrier;                // endpoints of dual edges
};

// Position of hyperplane h relative to hyperplane j.
enum class HypRel : std::uint8_t { Equal, Transverse, InPlus, InMinus };

struct VerifyOptions {
    // Exhaustive checks below these budgets, deterministic sampling above.
    std::size_t triple_budget = 20'000'000;
    std::size_t pair_budget = 4'000'000;
    std::uint64_t seed = 7;
};

struct VerifyReport {
    bool passed = true;
    bool exhaustive_triples = true;
    bool exhaustive_pairs = true;
    std::string failure;
    std::array<int, 3> witness{-1, -1, -1};
    int median_count = 1;          // medians of the violating triple, if any
};

class CubeComplex {
public:
    // Extracts hyperplanes by square-closure of the "opposite edges of a
    // 4-cycle" relation, assigns halfspace signatures and validates the
    // median-graph invariants.  Throws on non-median input.
    static CubeComplex build_from_graph(int n_vertices,
                                        const std::vector<std::pair<int, int>>& edges,
                                        const VerifyOptions& opts = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
    int dimension() const { return dimension_; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_hyperplane(int e) const { return edge_class_[e]; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& hyperplane(int j) const { return hyperplanes_[j]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Hyperplane dual to the edge (v, neighbors(v)[k]).
    int incident_hyperplane(int v, int k) const { return adj_class_[v][k]; }

    const Bitset& signature(int v) const { return signatures_[v]; }
    int vertex_by_signature(const Bitset& sig) const;

    // l^1 distance = Hamming distance of signatures.
    int distance_l1(int x, int y) const {
        return static_cast<int>((signatures_[x] ^ signatures_[y]).count());
    }
    Bitset separating_hyperplanes(int x, int y) const {
        return signatures_[x] ^ signatures_[y];
    }
    // Unique coordinatewise-majority vertex.
    int median(int x, int y, int z) const;

    bool vertex_in_plus(int v, int j) const { return signatures_[v].test(j); }

    HypRel relation(int j, int h) const { return relation_[j][h]; }
    bool transverse(int j, int h) const { return relation_[j][h] == HypRel::Transverse; }
    bool disjoint_hyperplanes(int j, int h) const {
        return j != h && relation_[j][h] != HypRel::Transverse;
    }
    // True iff j separates h1 from h2 (both disjoint from j, on opposite sides).
    bool separates(int j, int h1, int h2) const;

    // Vertices z with sig(z) between sig(x) and sig(y); the l^1 interval.
    Bitset interval_bitset(int x, int y) const;

    std::vector<int> bfs_distances(int src) const;

    Bitset empty_vertex_set() const { return Bitset(n_); }
    Bitset full_vertex_set() const { Bitset b(n_); b.set(); return b; }
    Bitset empty_hyperplane_set() const { return Bitset(hyperplanes_.size()); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_class_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_class_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<Bitset> signatures_;
    std::unordered_map<Bitset, int, bitset_hash> sig_index_;
    std::vector<std::vector<HypRel>> relation_;
    int dimension_ = 0;

    void extract_hyperplanes();
    void compute_relations();
    void compute_dimension();
};

// Exhaustive (budgeted) median verification on a plain graph: every vertex
// triple must have exactly one median.  Works on inputs that are not valid
// complexes; used both by build validation and as a standalone report.
VerifyReport verify_median_graph(int n_vertices,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const VerifyOptions& opts = {});

// Re-checks all CubeComplex invariants on a built complex (signature/BFS
// distance agreement, halfspace convexity via signature faithfulness,
// two-sidedness, square transversality, median property).
VerifyReport verify_complex(const CubeComplex& x, const VerifyOptions& opts = {});

}  // namespace cubex
