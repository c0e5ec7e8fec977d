#include "cubex/hyperplanes.hpp"

#include <algorithm>
#include <numeric>

namespace cubex {

bool facing_triple(const CubeComplex& x, int j1, int j2, int j3) {
    if (j1 == j2 || j2 == j3 || j1 == j3)
        throw not_distinct_error("facing_triple: hyperplanes must be distinct");
    return !x.separates(j1, j2, j3) && !x.separates(j2, j1, j3) && !x.separates(j3, j1, j2);
}

bool is_join(const CubeComplex& x, const HyperplanePairFamily& f) {
    auto side_ok = [&](const std::vector<int>& side) {
        for (std::size_t a = 0; a < side.size(); ++a)
            for (std::size_t b = a + 1; b < side.size(); ++b)
                for (std::size_t c = b + 1; c < side.size(); ++c)
                    if (facing_triple(x, side[a], side[b], side[c])) return false;
        return true;
    };
    for (int h : f.h_side)
        for (int v : f.v_side)
            if (!x.transverse(h, v)) return false;
    return side_ok(f.h_side) && side_ok(f.v_side);
}

bool is_grid(const CubeComplex& x, const HyperplanePairFamily& f) {
    auto pairwise_disjoint = [&](const std::vector<int>& side) {
        for (std::size_t a = 0; a < side.size(); ++a)
            for (std::size_t b = a + 1; b < side.size(); ++b)
                if (!x.disjoint_hyperplanes(side[a], side[b])) return false;
        return true;
    };
    return is_join(x, f) && pairwise_disjoint(f.h_side) && pairwise_disjoint(f.v_side);
}

// ---------------------------------------------------------------------------
// Join / grid search

namespace {

struct JoinSearch {
    const CubeComplex& x;
    bool need_disjoint;
    const Bitset* v_inside;  // V members must cross here (nullable)
    const Bitset* h_avoid;   // H members must avoid here (nullable)
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    bool exact = true;

    std::vector<int> best_h, best_v;
    std::vector<int> cur_h, cur_v;

    int best() const { return static_cast<int>(std::min(best_h.size(), best_v.size())); }

    bool side_admits(const std::vector<int>& side, int cand) const {
        for (std::size_t a = 0; a < side.size(); ++a) {
            if (need_disjoint && !x.disjoint_hyperplanes(side[a], cand)) return false;
            for (std::size_t b = a + 1; b < side.size(); ++b)
                if (facing_triple(x, side[a], side[b], cand)) return false;
        }
        return true;
    }

    bool transverse_to_all(const std::vector<int>& side, int cand) const {
        for (int s : side)
            if (!x.transverse(s, cand)) return false;
        return true;
    }

    void run(std::vector<int> candidates) {
        rec(candidates, 0);
    }

    void rec(const std::vector<int>& cands, std::size_t idx) {
        if (++nodes > node_budget) {
            exact = false;
            return;
        }
        int remaining = static_cast<int>(cands.size() - idx);
        int bound = std::min(static_cast<int>(cur_h.size()) + remaining,
                             static_cast<int>(cur_v.size()) + remaining);
        if (bound <= best()) return;
        if (idx == cands.size()) return;
        int c = cands[idx];

        bool h_allowed = (!h_avoid || !h_avoid->test(c)) && transverse_to_all(cur_v, c) &&
                         side_admits(cur_h, c);
        bool v_allowed = (!v_inside || v_inside->test(c)) && transverse_to_all(cur_h, c) &&
                         side_admits(cur_v, c);
        // symmetry cut for the unconstrained search: first chosen goes to H
        if (!v_inside && !h_avoid && cur_h.empty()) v_allowed = false;

        if (h_allowed) {
            cur_h.push_back(c);
            if (best() < static_cast<int>(std::min(cur_h.size(), cur_v.size()))) {
                best_h = cur_h;
                best_v = cur_v;
            }
            rec(cands, idx + 1);
            cur_h.pop_back();
        }
        if (v_allowed) {
            cur_v.push_back(c);
            if (best() < static_cast<int>(std::min(cur_h.size(), cur_v.size()))) {
                best_h = cur_h;
                best_v = cur_v;
            }
            rec(cands, idx + 1);
            cur_v.pop_back();
        }
        rec(cands, idx + 1);
    }
};

JoinSearchResult run_join_search(const CubeComplex& x, bool grid, const Bitset* v_inside,
                                 const Bitset* h_avoid, const SearchBudget& budget) {
    JoinSearch s{x, grid, v_inside, h_avoid, budget.nodes};
    std::vector<int> cands(x.hyperplane_count());
    std::iota(cands.begin(), cands.end(), 0);
    // prefer hyperplanes with many transversals; large joins surface early
    std::vector<int> deg(x.hyperplane_count(), 0);
    for (int a = 0; a < x.hyperplane_count(); ++a)
        for (int b = 0; b < x.hyperplane_count(); ++b)
            if (a != b && x.transverse(a, b)) ++deg[a];
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    s.run(cands);
    JoinSearchResult out;
    out.family.h_side = s.best_h;
    out.family.v_side = s.best_v;
    out.family.grid = grid;
    std::sort(out.family.h_side.begin(), out.family.h_side.end());
    std::sort(out.family.v_side.begin(), out.family.v_side.end());
    out.thinness = s.best();
    out.exact = s.exact;
    return out;
}

}  // namespace

JoinSearchResult max_join(const CubeComplex& x, const SearchBudget& budget) {
    return run_join_search(x, false, nullptr, nullptr, budget);
}

JoinSearchResult max_grid(const CubeComplex& x, const SearchBudget& budget) {
    return run_join_search(x, true, nullptr, nullptr, budget);
}

JoinSearchResult max_join_constrained(const CubeComplex& x, const Bitset& v_inside,
                                      const Bitset& h_avoid, const SearchBudget& budget) {
    return run_join_search(x, false, &v_inside, &h_avoid, budget);
}

JoinSearchResult max_grid_constrained(const CubeComplex& x, const Bitset& v_inside,
                                      const Bitset& h_avoid, const SearchBudget& budget) {
    return run_join_search(x, true, &v_inside, &h_avoid, budget);
}

// ---------------------------------------------------------------------------

std::int64_t ramsey_bound(int n) {
    if (n < 0) throw error("ramsey_bound: negative input");
    if (n == 0) return 0;
    if (n > 15) throw budget_error("ramsey_bound: argument too large for desk scale");
    // central binomial bound C(2n-2, n-1); exact for n <= 3
    std::int64_t r = 1;
    for (int i = 1; i <= n - 1; ++i) r = r * (n - 1 + i) / i;
    return r;
}

namespace {

// exact maximum independent set in the transversality graph of `side`
std::vector<int> max_disjoint_subfamily(const CubeComplex& x, std::vector<int> side,
                                        const SearchBudget& budget) {
    if (static_cast<int>(side.size()) > budget.max_candidates)
        throw budget_error("max_disjoint_subfamily: candidate cap exceeded");
    const int n = static_cast<int>(side.size());
    std::vector<std::uint32_t> conflict(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && !x.disjoint_hyperplanes(side[a], side[b]))
                conflict[a] |= 1u << b;
    std::uint32_t best_mask = 0;
    int best = 0;
    auto rec = [&](auto&& self, int idx, std::uint32_t chosen, int size) -> void {
        if (size + (n - idx) <= best) return;
        if (idx == n) {
            if (size > best) {
                best = size;
                best_mask = chosen;
            }
            return;
        }
        if (!(conflict[idx] & chosen)) self(self, idx + 1, chosen | (1u << idx), size + 1);
        self(self, idx + 1, chosen, size);
    };
    rec(rec, 0, 0, 0);
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (best_mask & (1u << a)) out.push_back(side[a]);
    return out;
}

}  // namespace

HyperplanePairFamily extract_grid_from_join(const CubeComplex& x,
                                            const HyperplanePairFamily& join, int k,
                                            const SearchBudget& budget) {
    if (k <= x.dimension())
        throw too_small_error("extract_grid_from_join: k must exceed dim(X)");
    std::int64_t need = ramsey_bound(k);
    if (static_cast<std::int64_t>(join.h_side.size()) < need ||
        static_cast<std::int64_t>(join.v_side.size()) < need)
        throw too_small_error("extract_grid_from_join: sides below ramsey_bound(k)");

    HyperplanePairFamily out;
    out.h_side = max_disjoint_subfamily(x, join.h_side, budget);
    out.v_side = max_disjoint_subfamily(x, join.v_side, budget);
    out.grid = true;
    if (static_cast<int>(out.h_side.size()) < k || static_cast<int>(out.v_side.size()) < k)
        throw error("extract_grid_from_join: Ramsey extraction fell short");
    if (!is_grid(x, out)) throw error("extract_grid_from_join: output violates grid invariant");
    return out;
}

int max_facing_triple_free(const CubeComplex& x, const std::vector<int>& candidates,
                           const SearchBudget& budget) {
    if (static_cast<int>(candidates.size()) > budget.max_candidates)
        throw budget_error("max_facing_triple_free: candidate cap exceeded");
    const int n = static_cast<int>(candidates.size());
    int best = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int idx) -> void {
        if (static_cast<int>(chosen.size()) + (n - idx) <= best) return;
        if (idx == n) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        int c = candidates[idx];
        bool ok = true;
        for (std::size_t a = 0; a < chosen.size() && ok; ++a)
            for (std::size_t b = a + 1; b < chosen.size() && ok; ++b)
                ok = !facing_triple(x, chosen[a], chosen[b], c);
        if (ok) {
            chosen.push_back(c);
            self(self, idx + 1);
            chosen.pop_back();
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return best;
}

WellSeparation well_separation_degree(const CubeComplex& x, int j, int h,
                                      const SearchBudget& budget) {
    if (j == h) throw not_distinct_error("well_separation_degree: equal hyperplanes");
    WellSeparation out;
    out.pair_transverse = x.transverse(j, h);
    out.pair_disjoint = x.disjoint_hyperplanes(j, h);
    std::vector<int> cands;
    for (int k = 0; k < x.hyperplane_count(); ++k)
        if (k != j && k != h && x.transverse(k, j) && x.transverse(k, h)) cands.push_back(k);
    out.degree = max_facing_triple_free(x, cands, budget);
    return out;
}

bool strongly_separated(const CubeComplex& x, int j, int h) {
    if (j == h) throw not_distinct_error("strongly_separated: equal hyperplanes");
    if (!x.disjoint_hyperplanes(j, h)) return false;
    for (int k = 0; k < x.hyperplane_count(); ++k)
        if (k != j && k != h && x.transverse(k, j) && x.transverse(k, h)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Partial isometries

PartialIsometry PartialIsometry::identity(const CubeComplex& x, const std::string& label) {
    PartialIsometry g;
    g.parent = &x;
    g.map.resize(x.vertex_count());
    std::iota(g.map.begin(), g.map.end(), 0);
    g.label = label;
    return g;
}

std::size_t PartialIsometry::domain_size() const {
    return static_cast<std::size_t>(std::count_if(map.begin(), map.end(),
                                                  [](int v) { return v != -1; }));
}

Bitset PartialIsometry::domain_set() const {
    Bitset d = parent->empty_vertex_set();
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] != -1) d.set(v);
    return d;
}

PartialIsometry PartialIsometry::inverse() const {
    PartialIsometry g;
    g.parent = parent;
    g.map.assign(map.size(), -1);
    g.label = label.empty() ? "" : label + "^-1";
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] != -1) {
            if (g.map[map[v]] != -1) throw error("partial isometry: not injective");
            g.map[map[v]] = static_cast<int>(v);
        }
    return g;
}

PartialIsometry PartialIsometry::after(const PartialIsometry& g) const {
    PartialIsometry out;
    out.parent = parent;
    out.map.assign(map.size(), -1);
    out.label = label + "*" + g.label;
    for (std::size_t v = 0; v < map.size(); ++v)
        if (g.map[v] != -1 && map[g.map[v]] != -1) out.map[v] = map[g.map[v]];
    return out;
}

PartialIsometry PartialIsometry::power(int n) const {
    if (n == 0) return identity(*parent);
    PartialIsometry base = n > 0 ? *this : inverse();
    PartialIsometry acc = base;
    for (int k = 1; k < std::abs(n); ++k) acc = base.after(acc);
    return acc;
}

void PartialIsometry::validate() const {
    std::vector<int> dom;
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] != -1) dom.push_back(static_cast<int>(v));
    std::vector<char> hit(map.size(), 0);
    for (int v : dom) {
        if (hit[map[v]]) throw error("partial isometry: not injective");
        hit[map[v]] = 1;
    }
    for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = a + 1; b < dom.size(); ++b)
            if (parent->distance_l1(dom[a], dom[b]) !=
                parent->distance_l1(map[dom[a]], map[dom[b]]))
                throw error("partial isometry: not distance preserving");
}

PartialIsometry left_multiplication(const GroupBall& ball, const Word& g,
                                    const std::string& label) {
    WordOps ops{&ball.graph, ball.coxeter};
    PartialIsometry out;
    out.parent = &ball.complex;
    out.map.assign(ball.words.size(), -1);
    out.label = label;
    for (std::size_t v = 0; v < ball.words.size(); ++v)
        out.map[v] = ball.vertex_of(ops.canon_concat(g, ball.words[v]));
    return out;
}

// ---------------------------------------------------------------------------

std::optional<SkewerWitness> skewers(const CubeComplex& x, const PartialIsometry& g, int j1,
                                     int j2, int n_max) {
    if (j1 == j2) throw not_distinct_error("skewers: hyperplanes must be distinct");
    const auto& h1 = x.hyperplane(j1);
    const auto& h2 = x.hyperplane(j2);
    {
        Bitset carriers = h1.carrier | h2.carrier;
        if (!(carriers & g.domain_set()).any())
            throw domain_too_small_error("skewers: domain misses both carriers");
    }

    for (int mag = 1; mag <= n_max; ++mag)
        for (int sign : {1, -1}) {
            int n = sign * mag;
            PartialIsometry gp = g.power(n);
            for (bool d1_plus : {true, false})
                for (bool d2_plus : {true, false}) {
                    const Bitset& d1 = d1_plus ? h1.halfspace_plus : h1.halfspace_minus;
                    const Bitset& d2 = d2_plus ? h2.halfspace_plus : h2.halfspace_minus;
                    if (!d2.is_proper_subset_of(d1)) continue;
                    // all covered D1 vertices land in D2
                    bool ok = true;
                    for (auto v = d1.find_first(); ok && v != Bitset::npos;
                         v = d1.find_next(v)) {
                        int iv = static_cast<int>(v);
                        if (gp.in_domain(iv) && !d2.test(gp.apply(iv))) ok = false;
                    }
                    if (!ok) continue;
                    // some dual edge of j1 maps entirely beyond j2; this makes
                    // the nesting strict at the visible scale
                    bool edge_witness = false;
                    for (int e : h1.edge_class) {
                        auto [u, v] = x.edges()[e];
                        if (gp.in_domain(u) && gp.in_domain(v) && d2.test(gp.apply(u)) &&
                            d2.test(gp.apply(v))) {
                            edge_witness = true;
                            break;
                        }
                    }
                    if (!edge_witness) continue;
                    return SkewerWitness{n, j1, j2, d1_plus, d2_plus};
                }
        }
    return std::nullopt;
}

}  // namespace cubex
