#include "cubex/contracting.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace cubex {

ConvexSubcomplex carrier_subcomplex(const CubeComplex& x, int j) {
    return as_convex(x, x.hyperplane(j).carrier);
}

std::vector<int> order_chain(const CubeComplex& x, std::vector<int> family) {
    if (family.size() <= 2) return family;
    // an end separates no pair of the others
    int end = -1;
    for (int j : family) {
        bool separ = false;
        for (int a : family)
            for (int b : family)
                if (a != b && a != j && b != j && a < b && x.separates(j, a, b)) separ = true;
        if (!separ) {
            end = j;
            break;
        }
    }
    if (end == -1) throw error("order_chain: family is not a chain");
    auto sep_count = [&](int k) {
        int c = 0;
        for (int m : family)
            if (m != k && m != end && x.separates(m, end, k)) ++c;
        return c;
    };
    std::sort(family.begin(), family.end(), [&](int a, int b) {
        if (a == end) return true;
        if (b == end) return false;
        return sep_count(a) < sep_count(b);
    });
    return family;
}

// ---------------------------------------------------------------------------
// Rectangle contraction constant: ladder search for k x k squares whose
// bottom row lies in y and whose upper rows avoid y.

namespace {

void base_rows(const CubeComplex& x, const ConvexSubcomplex& y, int k,
               std::vector<std::vector<int>>& out) {
    std::vector<int> path;
    auto rec = [&](auto&& self, int cur) -> void {
        if (static_cast<int>(path.size()) == k + 1) {
            out.push_back(path);
            return;
        }
        for (int w : x.neighbors(cur)) {
            if (!y.contains(w)) continue;
            if (x.distance_l1(path.front(), w) != static_cast<int>(path.size())) continue;
            path.push_back(w);
            self(self, w);
            path.pop_back();
        }
    };
    for (int v : y.member_list) {
        path.assign(1, v);
        rec(rec, v);
    }
}

}  // namespace

RectContraction contraction_constant_rect(const CubeComplex& x, const ConvexSubcomplex& y,
                                          const SearchBudget& budget) {
    RectContraction out;
    std::uint64_t nodes = 0;
    for (int k = 1;; ++k) {
        bool found = false;
        std::vector<std::vector<int>> bases;
        base_rows(x, y, k, bases);
        if (bases.empty()) break;
        for (const auto& base : bases) {
            // BFS upward over rows, one hyperplane translation per level;
            // parents kept so the witness is the actual ladder
            std::vector<std::vector<std::pair<std::vector<int>, int>>> levels(k + 1);
            levels[0].emplace_back(base, -1);
            for (int j = 1; j <= k && !found; ++j) {
                std::set<std::vector<int>> seen;
                for (std::size_t pi = 0; pi < levels[j - 1].size() && !found; ++pi) {
                    const std::vector<int> row = levels[j - 1][pi].first;
                    if (++nodes > budget.nodes) {
                        out.exact = false;
                        return out;
                    }
                    const auto& nb = x.neighbors(row[0]);
                    for (std::size_t t = 0; t < nb.size() && !found; ++t) {
                        int hyp = x.incident_hyperplane(row[0], static_cast<int>(t));
                        std::vector<int> up(row.size());
                        bool ok = true;
                        for (std::size_t i = 0; i < row.size() && ok; ++i) {
                            Bitset sig = x.signature(row[i]);
                            sig.flip(hyp);
                            up[i] = x.vertex_by_signature(sig);
                            ok = up[i] != -1 && !y.contains(up[i]);
                        }
                        if (!ok || !seen.insert(up).second) continue;
                        if (j < k) {
                            levels[j].emplace_back(up, static_cast<int>(pi));
                            continue;
                        }
                        // diagonal distances certify the isometric embedding
                        if (x.distance_l1(base[0], up[k]) != 2 * k ||
                            x.distance_l1(base[k], up[0]) != 2 * k)
                            continue;
                        levels[k].emplace_back(up, static_cast<int>(pi));
                        FlatRectangle r;
                        r.p = k;
                        r.q = k;
                        r.grid.assign(static_cast<std::size_t>(k + 1) * (k + 1), -1);
                        int cur = static_cast<int>(levels[k].size()) - 1;
                        for (int lev = k; lev >= 0; --lev) {
                            const auto& [lrow, par] = levels[lev][cur];
                            for (int i = 0; i <= k; ++i) r.at(i, lev) = lrow[i];
                            cur = par < 0 ? 0 : par;
                        }
                        if (!r.is_isometric(x)) continue;
                        out.constant = k;
                        out.witness = r;
                        found = true;
                    }
                }
            }
            if (found) break;
        }
        if (!found) break;
    }
    return out;
}

JoinSearchResult contraction_constant_grid(const CubeComplex& x, const ConvexSubcomplex& y,
                                           const SearchBudget& budget) {
    return max_grid_constrained(x, y.crossing, y.crossing, budget);
}

JoinSearchResult contraction_constant_join(const CubeComplex& x, const ConvexSubcomplex& y,
                                           const SearchBudget& budget) {
    return max_join_constrained(x, y.crossing, y.crossing, budget);
}

BallProjectionCheck contracting_ball_check(const CubeComplex& x, const ConvexSubcomplex& y,
                                           int k) {
    BallProjectionCheck out;
    const int n = x.vertex_count();
    std::vector<int> gate(n);
    for (int v = 0; v < n; ++v) gate[v] = gate_project(x, v, y);
    auto dist_y = distances_to_set(x, y.members);

    for (int c = 0; c < n; ++c) {
        if (dist_y[c] == 0) continue;
        auto dist = x.bfs_distances(c);
        // vertices ordered by distance from the center
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        std::vector<int> gates;
        std::size_t idx = 0;
        for (int rad = 0; rad < dist_y[c]; ++rad) {
            while (idx < order.size() && dist[order[idx]] <= rad) {
                gates.push_back(gate[order[idx]]);
                ++idx;
            }
            int diam = 0;
            for (std::size_t a = 0; a < gates.size(); ++a)
                for (std::size_t b = a + 1; b < gates.size(); ++b)
                    diam = std::max(diam, x.distance_l1(gates[a], gates[b]));
            if (diam > k) {
                out.ok = false;
                out.center = c;
                out.radius = rad;
                out.diameter = diam;
                return out;
            }
        }
    }
    return out;
}

HullRadiusResult hull_radius_check(const CubeComplex& x, const Bitset& s, int k) {
    HullRadiusResult out;
    auto dist_s = distances_to_set(x, s);
    std::vector<int> members;
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v))
        members.push_back(static_cast<int>(v));

    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            Bitset iv = x.interval_bitset(members[a], members[b]);
            for (auto v = iv.find_first(); v != Bitset::npos; v = iv.find_next(v))
                out.measured_quasiconvexity =
                    std::max(out.measured_quasiconvexity, dist_s[v]);
        }
    if (out.measured_quasiconvexity > k)
        throw not_quasiconvex_error("hull_radius_check: set is not " + std::to_string(k) +
                                    "-quasiconvex (measured " +
                                    std::to_string(out.measured_quasiconvexity) + ")");

    out.bound = ramsey_bound(std::max(x.dimension() + 1, k));
    ConvexSubcomplex hull = convex_hull(x, s);
    for (int v : hull.member_list)
        out.max_hull_distance = std::max(out.max_hull_distance, dist_s[v]);
    out.ok = out.max_hull_distance <= out.bound;
    return out;
}

bool racg_special_morse(const DefiningGraph& g, const std::vector<int>& lambda) {
    std::vector<char> in_lambda(g.vertex_count(), 0);
    for (int v : lambda) {
        if (v < 0 || v >= g.vertex_count())
            throw not_induced_error("racg_special_morse: lambda vertex out of range");
        if (in_lambda[v]) throw not_induced_error("racg_special_morse: repeated lambda vertex");
        in_lambda[v] = 1;
    }
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int p = 0; p < n; ++p) {
                if (p == a || p == b || !g.adjacent(a, p) || !g.adjacent(b, p)) continue;
                for (int q = p + 1; q < n; ++q) {
                    if (q == a || q == b || !g.adjacent(a, q) || !g.adjacent(b, q) ||
                        g.adjacent(p, q))
                        continue;
                    // induced square a-p-b-q with diagonals (a,b) and (p,q)
                    bool all = in_lambda[a] && in_lambda[b] && in_lambda[p] && in_lambda[q];
                    if ((in_lambda[a] && in_lambda[b] && !all) ||
                        (in_lambda[p] && in_lambda[q] && !all))
                        return false;
                }
            }
        }
    return true;
}

std::optional<MorseFailureWitness> morse_failure_witness(const CubeComplex& x,
                                                         const ConvexSubcomplex& y, int n,
                                                         const SearchBudget& budget) {
    if (n == 0) {
        MorseFailureWitness w;
        int v = y.member_list.front();
        w.path = {v, v};
        w.quasigeodesic_ok = true;
        return w;
    }
    JoinSearchResult grid = contraction_constant_grid(x, y, budget);
    if (grid.thinness < n) return std::nullopt;

    std::vector<int> hs = order_chain(x, grid.family.h_side);
    std::vector<int> vs = order_chain(x, grid.family.v_side);
    // orient hs so the first element is nearest y: y sits inside one halfspace
    // of every h member; the nearest has the largest y-side halfspace
    std::stable_sort(hs.begin(), hs.end(), [&](int a, int b) {
        auto side = [&](int j) {
            const auto& h = x.hyperplane(j);
            return y.members.is_subset_of(h.halfspace_plus) ? h.halfspace_plus.count()
                                                            : h.halfspace_minus.count();
        };
        return side(a) > side(b);
    });

    ConvexSubcomplex nb_v1 = carrier_subcomplex(x, vs.front());
    ConvexSubcomplex nb_vlast = carrier_subcomplex(x, vs.back());
    ConvexSubcomplex nb_hlast = carrier_subcomplex(x, hs.back());
    CycleRectangleResult cyc = cycle_rectangle(x, y, nb_v1, nb_hlast, nb_vlast);

    const FlatRectangle& r = cyc.rect;
    int mm = std::min({r.p, r.q, n});
    if (mm < 1) return std::nullopt;

    MorseFailureWitness w;
    w.height = mm;
    for (int j = 0; j <= mm; ++j) w.path.push_back(r.at(0, j));
    for (int i = 1; i <= mm; ++i) w.path.push_back(r.at(i, mm));
    for (int j = mm - 1; j >= 0; --j) w.path.push_back(r.at(mm, j));

    w.quasigeodesic_ok = true;
    for (std::size_t t = 0; t < w.path.size(); ++t)
        for (std::size_t u = t + 1; u < w.path.size(); ++u) {
            int d = x.distance_l1(w.path[t], w.path[u]);
            if (3 * d < static_cast<int>(u - t)) w.quasigeodesic_ok = false;
        }
    auto dist_y = distances_to_set(x, y.members);
    for (int v : w.path) w.far_distance = std::max(w.far_distance, dist_y[v]);
    return w;
}

}  // namespace cubex
