#include "cubex/hyperbolicity.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace cubex {

bool AuxGraph::connected() const {
    if (n <= 1) return true;
    auto d = bfs(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> AuxGraph::bfs(int src) const {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

int AuxGraph::diameter() const {
    int d = 0;
    for (int v = 0; v < n; ++v) {
        auto row = bfs(v);
        for (int x : row) {
            if (x == -1) return -1;
            d = std::max(d, x);
        }
    }
    return d;
}

DistMatrix distance_matrix_l1(const CubeComplex& x) {
    DistMatrix m(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) {
        m[v].resize(x.vertex_count());
        for (int w = 0; w < x.vertex_count(); ++w) m[v][w] = x.distance_l1(v, w);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Flat rectangles

RectangleSearch max_flat_rectangle_thickness(const CubeComplex& x,
                                             const SearchBudget& budget) {
    RectangleSearch out;
    const int n = x.vertex_count();
    DistMatrix dist = distance_matrix_l1(x);
    std::uint64_t nodes = 0;

    int diam = 0;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) diam = std::max(diam, dist[a][c]);

    for (int k = 1; 2 * k <= diam; ++k) {
        bool found = false;
        for (int a = 0; a < n && !found; ++a) {
            for (int c = 0; c < n && !found; ++c) {
                if (dist[a][c] != 2 * k) continue;
                // b and d are antipodal midlevel vertices of I(a, c)
                std::vector<int> mid;
                for (int v = 0; v < n; ++v)
                    if (dist[a][v] == k && dist[v][c] == k) mid.push_back(v);
                for (std::size_t i = 0; i < mid.size() && !found; ++i)
                    for (std::size_t j = i + 1; j < mid.size() && !found; ++j) {
                        if (++nodes > budget.nodes) {
                            out.exact = false;
                            return out;
                        }
                        if (dist[mid[i]][mid[j]] != 2 * k) continue;
                        FlatRectangle r =
                            rectangle_from_corners(x, a, mid[i], c, mid[j]);
                        if (!r.is_isometric(x))
                            throw error("rectangle search: corner quadruple failed to embed");
                        out.thickness = k;
                        out.witness = r;
                        found = true;
                    }
            }
        }
        if (!found) break;
    }
    return out;
}

int join_thinness(const CubeComplex& x, const SearchBudget& budget) {
    return max_join(x, budget).thinness;
}

int grid_thinness(const CubeComplex& x, const SearchBudget& budget) {
    return max_grid(x, budget).thinness;
}

// ---------------------------------------------------------------------------
// Links

AuxGraph vertex_link(const CubeComplex& x, int v) {
    const auto& nb = x.neighbors(v);
    AuxGraph g = AuxGraph::with_nodes(static_cast<int>(nb.size()));
    for (int a : nb) g.labels.push_back(std::to_string(a));
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t k = i + 1; k < nb.size(); ++k) {
            // the two edges span a square iff the fourth corner exists
            Bitset target = x.signature(nb[i]) ^ x.signature(nb[k]) ^ x.signature(v);
            int w = x.vertex_by_signature(target);
            if (w != -1 && x.distance_l1(v, w) == 2)
                g.add_edge(static_cast<int>(i), static_cast<int>(k));
        }
    return g;
}

LinkSquare link_has_induced_4cycle(const CubeComplex& x) {
    LinkSquare out;
    for (int v = 0; v < x.vertex_count(); ++v) {
        AuxGraph link = vertex_link(x, v);
        const int m = link.n;
        std::vector<std::vector<char>> a(m, std::vector<char>(m, 0));
        for (auto& [p, q] : link.edges) a[p][q] = a[q][p] = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (a[i][j]) continue;  // i,j must be the non-adjacent diagonal
                for (int p = 0; p < m; ++p) {
                    if (p == i || p == j || !a[i][p] || !a[j][p]) continue;
                    for (int q = p + 1; q < m; ++q) {
                        if (q == i || q == j || !a[i][q] || !a[j][q] || a[p][q]) continue;
                        out.found = true;
                        out.vertex = v;
                        out.neighbors = {x.neighbors(v)[i], x.neighbors(v)[p],
                                         x.neighbors(v)[j], x.neighbors(v)[q]};
                        return out;
                    }
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bicliques

BicycleResult thin_bicycle_constant(const AuxGraph& g, const SearchBudget& budget) {
    BicycleResult out;
    const int n = g.n;
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (auto& [p, q] : g.edges) a[p][q] = a[q][p] = 1;
    std::uint64_t nodes = 0;
    std::vector<int> side_a, side_b;
    int best = 0;
    auto rec = [&](auto&& self, int idx) -> void {
        if (++nodes > budget.nodes) {
            out.exact = false;
            return;
        }
        int remaining = n - idx;
        int bound = std::min(static_cast<int>(side_a.size()) + remaining,
                             static_cast<int>(side_b.size()) + remaining);
        if (bound <= best) return;
        if (idx == n) return;
        auto fits = [&](const std::vector<int>& other) {
            for (int o : other)
                if (!a[o][idx]) return false;
            return true;
        };
        if (side_a.empty() && side_b.empty()) {
            // symmetry: the smallest chosen node goes to side A
            side_a.push_back(idx);
            best = std::max(best, 0);
            self(self, idx + 1);
            side_a.pop_back();
        } else {
            if (fits(side_b)) {
                side_a.push_back(idx);
                best = std::max(best,
                                static_cast<int>(std::min(side_a.size(), side_b.size())));
                self(self, idx + 1);
                side_a.pop_back();
            }
            if (fits(side_a)) {
                side_b.push_back(idx);
                best = std::max(best,
                                static_cast<int>(std::min(side_a.size(), side_b.size())));
                self(self, idx + 1);
                side_b.pop_back();
            }
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    out.constant = best;
    return out;
}

// ---------------------------------------------------------------------------
// Four-point condition

FourPointResult four_point_delta(const DistMatrix& dist, std::uint64_t quad_budget,
                                 std::uint64_t seed) {
    FourPointResult out;
    const int n = static_cast<int>(dist.size());
    auto defect = [&](int p, int q, int r, int s) {
        int s1 = dist[p][r] + dist[q][s];
        int s2 = std::max(dist[p][q] + dist[r][s], dist[p][s] + dist[q][r]);
        return s1 - s2;
    };
    std::uint64_t total = static_cast<std::uint64_t>(n) * n * n * n;
    if (total <= quad_budget) {
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q)
                for (int r = q; r < n; ++r)
                    for (int s = r; s < n; ++s) {
                        // the four-point condition is symmetric under the
                        // relabelings generated by (p q r s) rotations; checking
                        // the three pairings of a sorted quadruple covers all
                        int d1 = defect(p, q, r, s);
                        int d2 = defect(p, r, q, s);
                        int d3 = defect(p, q, s, r);
                        int d = std::max({d1, d2, d3});
                        if (d > out.twice_delta) {
                            out.twice_delta = d;
                            out.witness = {p, q, r, s};
                        }
                    }
    } else {
        out.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (std::uint64_t t = 0; t < quad_budget / 16; ++t) {
            int p = pick(rng), q = pick(rng), r = pick(rng), s = pick(rng);
            int d = defect(p, q, r, s);
            if (d > out.twice_delta) {
                out.twice_delta = d;
                out.witness = {p, q, r, s};
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// l^infinity

namespace {

// longest chain of pairwise disjoint hyperplanes separating u and v
int linf_by_chain(const CubeComplex& x, int u, int v) {
    Bitset sep = x.separating_hyperplanes(u, v);
    std::vector<int> hs;
    for (auto j = sep.find_first(); j != Bitset::npos; j = sep.find_next(j))
        hs.push_back(static_cast<int>(j));
    const int k = static_cast<int>(hs.size());
    if (k == 0) return 0;
    // orient towards v and sort by shrinking v-side
    std::vector<const Bitset*> vside(k);
    std::vector<std::size_t> size(k);
    for (int i = 0; i < k; ++i) {
        const auto& h = x.hyperplane(hs[i]);
        vside[i] = x.vertex_in_plus(v, hs[i]) ? &h.halfspace_plus : &h.halfspace_minus;
        size[i] = vside[i]->count();
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return size[a] > size[b]; });
    std::vector<int> dp(k, 1);
    int best = 1;
    for (int ii = 0; ii < k; ++ii) {
        int i = order[ii];
        for (int jj = 0; jj < ii; ++jj) {
            int j = order[jj];
            if (x.disjoint_hyperplanes(hs[i], hs[j]) && vside[i]->is_proper_subset_of(*vside[j]))
                dp[i] = std::max(dp[i], dp[j] + 1);
        }
        best = std::max(best, dp[i]);
    }
    return best;
}

// BFS where one step moves across any family of pairwise transverse
// hyperplanes meeting at the current vertex (a cube traversal)
int linf_by_cubes(const CubeComplex& x, int u, int v) {
    const int n = x.vertex_count();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        if (a == v) return dist[a];
        // local hyperplanes, deduped
        std::vector<int> local;
        for (std::size_t t = 0; t < x.neighbors(a).size(); ++t)
            local.push_back(x.incident_hyperplane(a, static_cast<int>(t)));
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        const int m = static_cast<int>(local.size());
        // enumerate cliques in the local transversality relation
        std::vector<std::uint32_t> tr(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && x.transverse(local[i], local[j])) tr[i] |= 1u << j;
        auto expand = [&](auto&& self, std::uint32_t clique, std::uint32_t cand, int lo) -> void {
            if (clique) {
                Bitset sig = x.signature(a);
                for (int i = 0; i < m; ++i)
                    if (clique & (1u << i)) sig.flip(local[i]);
                int w = x.vertex_by_signature(sig);
                if (w != -1 && dist[w] == -1) {
                    dist[w] = dist[a] + 1;
                    q.push(w);
                }
            }
            for (int i = lo; i < m; ++i)
                if (cand & (1u << i))
                    self(self, clique | (1u << i), cand & tr[i], i + 1);
        };
        expand(expand, 0, (m >= 32 ? ~0u : ((1u << m) - 1)), 0);
    }
    throw error("distance_linf: target unreachable");
}

}  // namespace

int distance_linf(const CubeComplex& x, int u, int v) {
    if (u == v) return 0;
    int a = linf_by_cubes(x, u, v);
    int b = linf_by_chain(x, u, v);
    if (a != b)
        throw error("distance_linf: cube-path and disjoint-chain computations disagree");
    return a;
}

DistMatrix distance_matrix_linf(const CubeComplex& x) {
    DistMatrix m(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) {
        m[v].assign(x.vertex_count(), 0);
        for (int w = 0; w < x.vertex_count(); ++w)
            if (v < w) m[v][w] = distance_linf(x, v, w);
    }
    for (int v = 0; v < x.vertex_count(); ++v)
        for (int w = 0; w < v; ++w) m[v][w] = m[w][v];
    return m;
}

// ---------------------------------------------------------------------------
// Graph applications

bool graph_has_induced_square(const DefiningGraph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a >= b || g.adjacent(a, b)) continue;  // (a, b) diagonal
            for (int p = 0; p < n; ++p) {
                if (p == a || p == b || !g.adjacent(a, p) || !g.adjacent(b, p)) continue;
                for (int q = p + 1; q < n; ++q) {
                    if (q == a || q == b || !g.adjacent(a, q) || !g.adjacent(b, q) ||
                        g.adjacent(p, q))
                        continue;
                    return true;
                }
            }
        }
    return false;
}

bool meier_racg_hyperbolic(const DefiningGraph& g) { return !graph_has_induced_square(g); }

namespace {

bool has_cycle(const DefiningGraph& g, const std::vector<int>& verts) {
    // induced subgraph has a cycle iff it is not a forest
    std::vector<int> idx(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    int edges = 0;
    for (auto& [a, b] : g.edges)
        if (idx[a] != -1 && idx[b] != -1) ++edges;
    // count components via union-find
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = static_cast<int>(verts.size());
    for (auto& [a, b] : g.edges)
        if (idx[a] != -1 && idx[b] != -1) {
            int ra = find(idx[a]), rb = find(idx[b]);
            if (ra != rb) {
                parent[ra] = rb;
                --comps;
            }
        }
    return edges > static_cast<int>(verts.size()) - comps;
}

}  // namespace

bool braid2_hyperbolic(const DefiningGraph& g) {
    const int n = g.vertex_count();
    {
        std::vector<std::vector<int>> adj(n);
        for (auto& [a, b] : g.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> seen(n, 0);
        std::queue<int> q;
        if (n > 0) {
            q.push(0);
            seen[0] = 1;
        }
        int reach = n > 0 ? 1 : 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reach;
                    q.push(w);
                }
        }
        if (reach != n) throw disconnected_error("braid2_hyperbolic: graph must be connected");
    }
    if (n > 20) throw budget_error("braid2_hyperbolic: graph too large for exact subset scan");
    // disjoint cycle pair <=> some bipartition with a cycle on each side
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<int> left, right;
        for (int v = 0; v < n; ++v)
            (s & (1u << v)) ? left.push_back(v) : right.push_back(v);
        if (has_cycle(g, left) && has_cycle(g, right)) return false;
    }
    return true;
}

bool raag_acyl_hyperbolic(const DefiningGraph& g) {
    return g.vertex_count() >= 2 && g.complement_connected();
}

}  // namespace cubex
