#include "cubex/curvegraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cubex {

AuxGraph crossing_graph(const CubeComplex& x) {
    AuxGraph g = AuxGraph::with_nodes(x.hyperplane_count(), AuxKind::Crossing);
    for (int j = 0; j < g.n; ++j) g.labels.push_back("J" + std::to_string(j));
    for (int j = 0; j < g.n; ++j)
        for (int h = j + 1; h < g.n; ++h)
            if (x.transverse(j, h)) g.add_edge(j, h);
    return g;
}

AuxGraph contact_graph(const CubeComplex& x) {
    AuxGraph g = AuxGraph::with_nodes(x.hyperplane_count(), AuxKind::Contact);
    for (int j = 0; j < g.n; ++j) g.labels.push_back("J" + std::to_string(j));
    for (int j = 0; j < g.n; ++j)
        for (int h = j + 1; h < g.n; ++h)
            if (x.hyperplane(j).carrier.intersects(x.hyperplane(h).carrier)) g.add_edge(j, h);
    return g;
}

CutVertexReport cutvertex_crossing_check(const CubeComplex& x) {
    CutVertexReport out;
    out.crossing_disconnected = !crossing_graph(x).connected();

    const int n = x.vertex_count();
    for (int v = 0; v < n && !out.has_cut_vertex; ++v) {
        if (n <= 2) break;
        // BFS avoiding v
        int start = v == 0 ? 1 : 0;
        std::vector<int> seen(n, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int reach = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : x.neighbors(u))
                if (w != v && !seen[w]) {
                    seen[w] = 1;
                    ++reach;
                    q.push(w);
                }
        }
        if (reach != n - 1) {
            out.has_cut_vertex = true;
            out.cut_vertex = v;
        }
    }
    if (out.crossing_disconnected != out.has_cut_vertex)
        throw error("cutvertex_crossing_check: biconditional fails");
    return out;
}

BottleneckReport bottleneck_check(const AuxGraph& g, int twice_delta) {
    BottleneckReport out;
    if (!g.connected()) throw disconnected_error("bottleneck_check: graph is disconnected");
    std::vector<std::vector<int>> dist(g.n);
    for (int v = 0; v < g.n; ++v) dist[v] = g.bfs(v);

    // avoidance test: can a path from x to y dodge the ball around the midpoint?
    auto midpoint_works = [&](int x, int y, int mu, int mv) {
        // mu == mv: vertex midpoint; else midpoint of edge (mu, mv)
        auto inside = [&](int z) {
            int twice_d = (mu == mv) ? 2 * dist[mu][z]
                                     : 2 * std::min(dist[mu][z], dist[mv][z]) + 1;
            return twice_d <= twice_delta;
        };
        if (inside(x) || inside(y)) return true;
        std::vector<int> seen(g.n, 0);
        std::queue<int> q;
        q.push(x);
        seen[x] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.adj[u]) {
                if (seen[w] || inside(w)) continue;
                if (w == y) return false;  // avoiding path exists
                seen[w] = 1;
                q.push(w);
            }
        }
        return true;
    };

    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            int d = dist[x][y];
            bool works = false;
            if (d % 2 == 0) {
                for (int m = 0; m < g.n && !works; ++m)
                    if (dist[x][m] == d / 2 && dist[m][y] == d / 2)
                        works = midpoint_works(x, y, m, m);
            } else {
                for (auto& [u, v] : g.edges) {
                    if (works) break;
                    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}})
                        if (dist[x][a] == (d - 1) / 2 && dist[b][y] == (d - 1) / 2 &&
                            dist[x][a] + 1 + dist[b][y] == d) {
                            works = midpoint_works(x, y, a, b);
                            if (works) break;
                        }
                }
            }
            if (!works) {
                out.ok = false;
                out.bad_x = x;
                out.bad_y = y;
                return out;
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Strongly separated chains between hyperplanes

int strong_separation_count(const CubeComplex& x, int j, int h) {
    std::vector<int> seps;
    for (int k = 0; k < x.hyperplane_count(); ++k)
        if (k != j && k != h && x.separates(k, j, h)) seps.push_back(k);
    const int m = static_cast<int>(seps.size());
    if (m == 0) return 0;
    // orient towards h, sort by shrinking h-side; consecutive strong
    // separation propagates across nested chains
    const Bitset& hc = x.hyperplane(h).carrier;
    std::vector<const Bitset*> hside(m);
    for (int i = 0; i < m; ++i) {
        const auto& k = x.hyperplane(seps[i]);
        hside[i] = hc.is_subset_of(k.halfspace_plus) ? &k.halfspace_plus : &k.halfspace_minus;
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return hside[a]->count() > hside[b]->count(); });
    std::vector<int> dp(m, 1);
    int best = 1;
    for (int ii = 0; ii < m; ++ii) {
        int i = order[ii];
        for (int jj = 0; jj < ii; ++jj) {
            int t = order[jj];
            if (hside[i]->is_proper_subset_of(*hside[t]) &&
                strongly_separated(x, seps[i], seps[t]))
                dp[i] = std::max(dp[i], dp[t] + 1);
        }
        best = std::max(best, dp[i]);
    }
    return best;
}

QiReport qi_crossing_contact(const CubeComplex& x, const SearchBudget&) {
    QiReport out;
    AuxGraph cross = crossing_graph(x);
    AuxGraph contact = contact_graph(x);
    if (!cross.connected())
        throw disconnected_error("qi_crossing_contact: crossing graph is disconnected");
    for (int v = 0; v < x.vertex_count(); ++v) {
        int d = vertex_link(x, v).diameter();
        if (d == -1) throw error("qi_crossing_contact: disconnected vertex link");
        out.max_link_diameter = std::max(out.max_link_diameter, d);
    }
    const int r = std::max(1, out.max_link_diameter);
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        auto dc = cross.bfs(j);
        auto dg = contact.bfs(j);
        for (int h = j + 1; h < x.hyperplane_count(); ++h) {
            QiPairStats s;
            s.j = j;
            s.h = h;
            s.d_crossing = dc[h];
            s.d_contact = dg[h];
            s.strong_chain = strong_separation_count(x, j, h);
            if (s.d_crossing < s.strong_chain) out.lower_ok = false;
            if (s.strong_chain < s.d_crossing / (11 * r)) out.upper_ok = false;
            out.pairs.push_back(s);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// delta_L

DeltaL::DeltaL(const CubeComplex& x, const SearchBudget& budget) : x_(x), budget_(budget) {
    degree_.assign(x.hyperplane_count(), std::vector<int>(x.hyperplane_count(), -1));
}

int DeltaL::degree(int j, int h) const {
    if (degree_[j][h] == -1)
        degree_[j][h] = degree_[h][j] = well_separation_degree(x_, j, h, budget_).degree;
    return degree_[j][h];
}

int DeltaL::distance(int u, int v, int L) const {
    if (u == v) return 0;
    Bitset sep = x_.separating_hyperplanes(u, v);
    std::vector<int> hs;
    for (auto j = sep.find_first(); j != Bitset::npos; j = sep.find_next(j))
        hs.push_back(static_cast<int>(j));
    const int m = static_cast<int>(hs.size());
    std::vector<const Bitset*> vside(m);
    for (int i = 0; i < m; ++i) {
        const auto& h = x_.hyperplane(hs[i]);
        vside[i] = x_.vertex_in_plus(v, hs[i]) ? &h.halfspace_plus : &h.halfspace_minus;
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vside[a]->count() > vside[b]->count(); });
    std::vector<int> dp(m, 1);
    int best = 1;
    for (int ii = 0; ii < m; ++ii) {
        int i = order[ii];
        for (int jj = 0; jj < ii; ++jj) {
            int t = order[jj];
            if (!vside[i]->is_proper_subset_of(*vside[t])) continue;
            if (!x_.disjoint_hyperplanes(hs[i], hs[t])) continue;
            if (degree(hs[i], hs[t]) > L) continue;
            dp[i] = std::max(dp[i], dp[t] + 1);
        }
        best = std::max(best, dp[i]);
    }
    return best;
}

DistMatrix DeltaL::matrix(int L) const {
    DistMatrix m(x_.vertex_count());
    for (int v = 0; v < x_.vertex_count(); ++v) m[v].assign(x_.vertex_count(), 0);
    for (int v = 0; v < x_.vertex_count(); ++v)
        for (int w = v + 1; w < x_.vertex_count(); ++w)
            m[v][w] = m[w][v] = distance(v, w, L);
    return m;
}

int DeltaL::max_disjoint_degree() const {
    int best = 0;
    for (int j = 0; j < x_.hyperplane_count(); ++j)
        for (int h = j + 1; h < x_.hyperplane_count(); ++h)
            if (x_.disjoint_hyperplanes(j, h)) best = std::max(best, degree(j, h));
    return best;
}

int delta_L(const CubeComplex& x, int u, int v, int L) {
    return DeltaL(x).distance(u, v, L);
}

int delta_L_bruteforce(const CubeComplex& x, int u, int v, int L, bool require_disjoint) {
    Bitset sep = x.separating_hyperplanes(u, v);
    std::vector<int> hs;
    for (auto j = sep.find_first(); j != Bitset::npos; j = sep.find_next(j))
        hs.push_back(static_cast<int>(j));
    const int m = static_cast<int>(hs.size());
    if (m > 20) throw budget_error("delta_L_bruteforce: too many separating hyperplanes");
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        std::vector<int> fam;
        for (int i = 0; i < m; ++i)
            if (s & (1u << i)) fam.push_back(hs[i]);
        bool ok = true;
        for (std::size_t a = 0; a < fam.size() && ok; ++a)
            for (std::size_t b = a + 1; b < fam.size() && ok; ++b) {
                if (require_disjoint && !x.disjoint_hyperplanes(fam[a], fam[b])) ok = false;
                if (ok && well_separation_degree(x, fam[a], fam[b]).degree > L) ok = false;
            }
        if (ok) best = std::max(best, static_cast<int>(fam.size()));
    }
    return best;
}

Delta0ContactReport delta0_vs_contact(const CubeComplex& x) {
    Delta0ContactReport out;
    DeltaL dl(x);
    const int n = x.vertex_count();
    // carriers containing each vertex
    std::vector<std::vector<int>> at(n);
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        const auto& c = x.hyperplane(j).carrier;
        for (auto v = c.find_first(); v != Bitset::npos; v = c.find_next(v))
            at[v].push_back(j);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            int d0 = dl.distance(u, v, 0);
            for (int j : at[u])
                for (int h : at[v]) {
                    int s = (j == h) ? 0 : strong_separation_count(x, j, h);
                    if (!(s <= d0 && d0 <= s + 4)) {
                        out.ok = false;
                        return out;
                    }
                    out.max_gap = std::max(out.max_gap, d0 - s);
                }
        }
    return out;
}

StabilityReport stability_L(const CubeComplex& x, const SearchBudget& budget) {
    StabilityReport out;
    DeltaL dl(x, budget);
    out.l_star = dl.max_disjoint_degree();
    DistMatrix base = dl.matrix(out.l_star);
    for (int bump : {1, 3}) {
        DistMatrix other = dl.matrix(out.l_star + bump);
        if (other != base) out.stable = false;
    }
    return out;
}

HxReport hx_model(const CubeComplex& x, const SearchBudget& budget) {
    HxReport out;
    StabilityReport st = stability_L(x, budget);
    if (!st.stable) throw error("hx_model: delta_L fails to stabilise at L*");
    out.l_star = st.l_star;
    DeltaL dl(x, budget);
    out.four_point = four_point_delta(dl.matrix(out.l_star));
    out.bound_twice = 2 * 9 * (out.l_star + 2);
    out.ok = out.four_point.twice_delta <= out.bound_twice;
    return out;
}

int quasigeodesic_defect(const CubeComplex& x, int L, const std::vector<int>& geodesic) {
    if (geodesic.size() < 2) return 0;
    for (std::size_t i = 0; i + 1 < geodesic.size(); ++i)
        if (x.distance_l1(geodesic[i], geodesic[i + 1]) != 1)
            throw not_geodesic_error("quasigeodesic_defect: not an edge path");
    if (x.distance_l1(geodesic.front(), geodesic.back()) !=
        static_cast<int>(geodesic.size()) - 1)
        throw not_geodesic_error("quasigeodesic_defect: path is not geodesic");
    DeltaL dl(x);
    int u = geodesic.front(), v = geodesic.back();
    int whole = dl.distance(u, v, L);
    int defect = 0;
    for (std::size_t i = 1; i + 1 < geodesic.size(); ++i) {
        int z = geodesic[i];
        int split = dl.distance(u, z, L) + dl.distance(z, v, L);
        if (split < whole) throw error("quasigeodesic_defect: delta_L fails subadditivity");
        defect = std::max(defect, split - whole);
    }
    if (defect > 2 * (L + 3))
        throw error("quasigeodesic_defect: defect exceeds 2(L+3)");
    return defect;
}

// ---------------------------------------------------------------------------
// Isometries

IsometryReport classify_isometry_hx(const CubeComplex& x, const PartialIsometry& g, int L,
                                    int n_max, const SearchBudget& budget) {
    IsometryReport out;
    out.scale = n_max;
    Bitset dom = g.domain_set();
    if (dom.none()) throw domain_too_small_error("classify_isometry_hx: empty domain");

    // elliptic certificates: a fixed vertex, or a trivial power on the domain
    for (auto v = dom.find_first(); v != Bitset::npos; v = dom.find_next(v))
        if (g.apply(static_cast<int>(v)) == static_cast<int>(v)) {
            out.cls = IsometryClass::Elliptic;
            return out;
        }
    for (int k = 2; k <= n_max; ++k) {
        PartialIsometry p = g.power(k);
        Bitset pd = p.domain_set();
        if (pd.none()) break;
        bool ident = true;
        for (auto v = pd.find_first(); ident && v != Bitset::npos; v = pd.find_next(v))
            ident = p.apply(static_cast<int>(v)) == static_cast<int>(v);
        if (ident) {
            out.cls = IsometryClass::Elliptic;
            return out;
        }
    }

    // hyperplanes crossed by an orbit segment
    int base = static_cast<int>(dom.find_first());
    Bitset crossed = x.empty_hyperplane_set();
    int cur = base;
    for (int k = 0; k < n_max && g.in_domain(cur); ++k) {
        int nxt = g.apply(cur);
        crossed |= x.separating_hyperplanes(cur, nxt);
        cur = nxt;
    }
    std::vector<int> cand;
    for (auto j = crossed.find_first(); j != Bitset::npos; j = crossed.find_next(j))
        cand.push_back(static_cast<int>(j));

    DeltaL dl(x, budget);
    for (std::size_t a = 0; a < cand.size(); ++a)
        for (std::size_t b = 0; b < cand.size(); ++b) {
            if (a == b) continue;
            int j = cand[a], h = cand[b];
            if (!x.disjoint_hyperplanes(j, h) || dl.degree(j, h) > L) continue;
            try {
                auto w = skewers(x, g, j, h, n_max);
                if (w) {
                    out.cls = IsometryClass::Loxodromic;
                    out.witness = w;
                    return out;
                }
            } catch (const domain_too_small_error&) {
                // pair not testable at this scale
            }
        }
    out.cls = IsometryClass::Inconclusive;
    return out;
}

AcylReport acyl_on_hyperplanes_check(const CubeComplex& x,
                                     const std::vector<PartialIsometry>& action, int r, int n) {
    AcylReport out;
    const int hc = x.hyperplane_count();
    // hyperplane stabilisation per total action element
    std::vector<std::vector<char>> stab(action.size(), std::vector<char>(hc, 0));
    for (std::size_t gi = 0; gi < action.size(); ++gi) {
        const auto& g = action[gi];
        bool total = g.domain_size() == static_cast<std::size_t>(x.vertex_count());
        if (!total) {
            out.boundary_flagged = true;
            continue;
        }
        for (int j = 0; j < hc; ++j) {
            const auto& h = x.hyperplane(j);
            Bitset img = x.empty_vertex_set();
            for (auto v = h.halfspace_plus.find_first(); v != Bitset::npos;
                 v = h.halfspace_plus.find_next(v))
                img.set(g.apply(static_cast<int>(v)));
            stab[gi][j] = (img == h.halfspace_plus || img == h.halfspace_minus) ? 1 : 0;
        }
    }
    for (int j = 0; j < hc; ++j)
        for (int h = j + 1; h < hc; ++h) {
            int between = 0;
            for (int k = 0; k < hc; ++k)
                if (k != j && k != h && x.separates(k, j, h)) ++between;
            if (between < r) continue;
            int count = 0;
            for (std::size_t gi = 0; gi < action.size(); ++gi)
                if (stab[gi][j] && stab[gi][h]) ++count;
            if (count > out.max_stabilizer) {
                out.max_stabilizer = count;
                out.witness_j1 = j;
                out.witness_j2 = h;
            }
        }
    out.ok = out.max_stabilizer <= n;
    return out;
}

AuxGraph cone_off(const CubeComplex& x, const std::vector<ConvexSubcomplex>& family) {
    for (const auto& y : family)
        if (y.empty()) throw empty_subcomplex_error("cone_off: empty member");
    AuxGraph g = AuxGraph::with_nodes(x.vertex_count() + static_cast<int>(family.size()),
                                      AuxKind::ConeOff);
    for (int v = 0; v < x.vertex_count(); ++v) g.labels.push_back("v" + std::to_string(v));
    for (std::size_t i = 0; i < family.size(); ++i)
        g.labels.push_back("cone" + std::to_string(i));
    for (auto& [a, b] : x.edges()) g.add_edge(a, b);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (int v : family[i].member_list)
            g.add_edge(x.vertex_count() + static_cast<int>(i), v);
    return g;
}

// ---------------------------------------------------------------------------
// Relative hyperbolicity conditions

namespace {

int set_distance_max(const CubeComplex& x, const Bitset& set, const std::vector<int>& dist) {
    int d = 0;
    for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v))
        d = std::max(d, dist[v]);
    return d;
}

}  // namespace

RelHypReport relhyp_conditions(const CubeComplex& x,
                               const std::vector<ConvexSubcomplex>& family,
                               const SearchBudget& budget) {
    if (family.empty()) throw empty_subcomplex_error("relhyp_conditions: empty family");
    RelHypReport out;
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            out.c1 = std::max(
                out.c1, static_cast<int>((family[a].crossing & family[b].crossing).count()));

    // rectangles via corner quadruples; member distances of each witness
    std::vector<std::vector<int>> dist_to(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        dist_to[i] = distances_to_set(x, family[i].members);

    const int n = x.vertex_count();
    DistMatrix dist = distance_matrix_l1(x);
    std::uint64_t nodes = 0;
    // f(k) = max over k-thick rectangles of the distance to the closest member
    std::vector<int> worst;  // indexed by k
    for (int k = 1;; ++k) {
        int f = -1;
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                if (dist[a][c] < 2 * k) continue;
                std::vector<int> mid_b, mid_d;
                for (int v = 0; v < n; ++v)
                    if (dist[a][v] >= k && dist[v][c] >= k &&
                        dist[a][v] + dist[v][c] == dist[a][c])
                        mid_b.push_back(v);
                for (std::size_t i = 0; i < mid_b.size(); ++i)
                    for (std::size_t j = 0; j < mid_b.size(); ++j) {
                        if (++nodes > budget.nodes) {
                            out.exact = false;
                            out.c2 = -1;
                            return out;
                        }
                        int b = mid_b[i], d = mid_b[j];
                        if (b == d) continue;
                        if (dist[a][b] + dist[b][c] != dist[a][c]) continue;
                        if (dist[a][d] + dist[d][c] != dist[a][c]) continue;
                        if (dist[b][d] != dist[a][c]) continue;
                        if (std::min(dist[a][b], dist[a][d]) < k) continue;
                        FlatRectangle r = rectangle_from_corners(x, a, b, c, d);
                        if (!r.is_isometric(x)) continue;
                        Bitset verts = r.vertex_set(x);
                        int best_member = std::numeric_limits<int>::max();
                        for (std::size_t m = 0; m < family.size(); ++m)
                            best_member = std::min(best_member,
                                                   set_distance_max(x, verts, dist_to[m]));
                        f = std::max(f, best_member);
                    }
            }
        if (f == -1) break;  // no k-thick rectangle at all
        worst.push_back(f);
        if (worst.size() > 64) throw budget_error("relhyp_conditions: thickness runaway");
    }
    // least c with every c-thick rectangle within c of a member; c = 0 also
    // requires degenerate rectangles (geodesics) to lie inside members, which
    // only happens when the members cover everything
    Bitset covered = x.empty_vertex_set();
    for (const auto& m : family) covered |= m.members;
    for (int c = 0;; ++c) {
        bool ok = c > 0 || covered.all();
        for (int k = std::max(1, c); ok && k <= static_cast<int>(worst.size()); ++k)
            if (worst[k - 1] > c) ok = false;
        if (ok) {
            out.c2 = c;
            break;
        }
    }
    return out;
}

ProjectionAxiomsReport projection_axioms(const CubeComplex& x,
                                         const std::vector<ConvexSubcomplex>& family,
                                         const SearchBudget& budget) {
    if (family.size() < 2)
        throw error("projection_axioms: need at least two members");
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (family[a].members == family[b].members)
                throw error("projection_axioms: family members must be distinct");

    ProjectionAxiomsReport out;
    auto diam = [&](const Bitset& s) {
        int d = 0;
        std::vector<int> verts;
        for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v))
            verts.push_back(static_cast<int>(v));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                d = std::max(d, x.distance_l1(verts[i], verts[j]));
        return d;
    };

    const int nf = static_cast<int>(family.size());
    std::vector<std::vector<Bitset>> proj(nf);  // proj[c][a] = image of a on c
    for (int c = 0; c < nf; ++c) {
        proj[c].assign(nf, x.empty_vertex_set());
        for (int a = 0; a < nf; ++a) {
            if (a == c) continue;
            for (int v : family[a].member_list) proj[c][a].set(gate_project(x, v, family[c]));
            out.c1 = std::max(out.c1, diam(proj[c][a]));
        }
    }
    for (int m = 0; m < nf; ++m)
        out.join_constant =
            std::max(out.join_constant, contraction_constant_join(x, family[m], budget).thinness);
    out.c2 = 2 * out.c1 + out.join_constant;

    auto d_on = [&](int c, int a, int b) { return diam(proj[c][a] | proj[c][b]); };
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            for (int c = b + 1; c < nf; ++c) {
                int big = 0;
                if (d_on(a, b, c) > out.c2) ++big;
                if (d_on(b, a, c) > out.c2) ++big;
                if (d_on(c, a, b) > out.c2) ++big;
                if (big > 1) out.trichotomy_ok = false;
            }
            int far = 0;
            for (int c = 0; c < nf; ++c)
                if (c != a && c != b && d_on(c, a, b) > 3 * out.c1) ++far;
            out.max_far_count = std::max(out.max_far_count, far);
        }
    return out;
}

}  // namespace cubex
