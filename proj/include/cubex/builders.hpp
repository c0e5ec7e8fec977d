#pragma once

// Constructions of concrete finite CAT(0) cube complexes: balls of
// right-angled Coxeter and Artin groups (as convex hulls inside the Cayley
// graph), discretised graph-braid configuration spaces, products, and the
// standard desk fixtures (paths, grids, cubes, trees, staircases).

#include "cubex/complex.hpp"

namespace cubex {

struct DefiningGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    bool adjacent(int a, int b) const;
    void validate() const;  // simple graph, labels distinct
    int max_clique() const;
    // complement connectivity; a graph is a join iff its complement is disconnected
    bool complement_connected() const;
};

DefiningGraph make_defining_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct BuildOptions {
    std::size_t vertex_budget = 200'000;
};

// Letters: a RACG word holds vertex indices; a RAAG word holds
// (v+1) for a generator and -(v+1) for its inverse.
using Word = std::vector<int>;

// A ball-with-hull in the Cayley graph of a right-angled Coxeter or Artin
// group.  Vertex v of the complex carries the ShortLex normal form words[v];
// vertex 0 is the identity.
struct GroupBall {
    CubeComplex complex;
    DefiningGraph graph;
    int radius = 0;
    bool coxeter = true;
    std::vector<Word> words;
    std::unordered_map<std::string, int> index;  // encoded word -> vertex
    Bitset ball_members;                          // vertices with |w| <= radius

    int vertex_of(const Word& w) const;  // -1 if outside the hull
    Word word_of(int v) const { return words[v]; }
};

// Normal-form engine, exposed for tests and for partial isometries.
struct WordOps {
    const DefiningGraph* graph;
    bool coxeter;

    bool commute(int a, int b) const;
    Word reduce(Word w) const;
    Word canon(Word w) const;          // ShortLex normal form
    Word inverse(const Word& w) const;
    Word mult(const Word& a, const Word& b) const { return canon_concat(a, b); }
    Word canon_concat(const Word& a, const Word& b) const;
    // length of reduce(w + letter); O(|w|)
    int length_after_letter(const Word& w, int letter) const;
    static std::string encode(const Word& w);
};

GroupBall racg_ball(const DefiningGraph& g, int radius, const BuildOptions& opts = {});
GroupBall raag_ball(const DefiningGraph& g, int radius, const BuildOptions& opts = {});

struct BraidOptions {
    int cover_radius = 6;       // used only when the base complex is not CAT(0)
    bool auto_subdivide = true;
    std::size_t vertex_budget = 200'000;
};

struct BraidComplexResult {
    CubeComplex complex;
    bool base_is_cat0 = false;
    bool cover_truncated = false;   // cover ball hit the requested radius
    int subdivision_factor = 1;     // 1 = input used as-is
    // token configurations per vertex, only for the base-complex case
    std::vector<std::vector<int>> configs;
};

// Discretised unordered configuration space of n tokens on a graph; returns
// the base complex when it is CAT(0), else a convex ball of its universal
// cover.
BraidComplexResult graph_braid_complex(const DefiningGraph& top, int n,
                                       const BraidOptions& opts = {});

// Cartesian product; hyperplanes of the factors survive disjointly and
// cross-pairs are transverse (asserted).
CubeComplex product(const CubeComplex& a, const CubeComplex& b);

// Fixtures.
CubeComplex path_complex(int n_edges);
CubeComplex grid_complex(int p, int q);           // [0,p] x [0,q]
CubeComplex hypercube_complex(int dim);
CubeComplex staircase_complex(int squares);       // alternating right/up steps
CubeComplex tripod_complex();                     // three edges at a vertex

}  // namespace cubex
