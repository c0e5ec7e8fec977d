#include "cubex/builders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace cubex {

// ---------------------------------------------------------------------------
// Defining graphs

bool DefiningGraph::adjacent(int a, int b) const {
    for (auto& [u, v] : edges)
        if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
}

void DefiningGraph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
            throw error("defining graph: edge endpoint out of range");
        if (a == b) throw error("defining graph: loop");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) throw error("defining graph: multi-edge");
    }
    std::set<std::string> labs(labels.begin(), labels.end());
    if (labs.size() != labels.size()) throw error("defining graph: duplicate labels");
}

int DefiningGraph::max_clique() const {
    const int n = vertex_count();
    std::vector<std::uint64_t> mask(n, 0);
    for (auto& [a, b] : edges) {
        mask[a] |= 1ULL << b;
        mask[b] |= 1ULL << a;
    }
    int best = n > 0 ? 1 : 0;
    auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        int a = std::countr_zero(cand);
        self(self, cand & ~(1ULL << a), size);
        self(self, cand & mask[a], size + 1);
    };
    if (n > 0 && n <= 64) rec(rec, (n == 64) ? ~0ULL : ((1ULL << n) - 1), 0);
    return best;
}

bool DefiningGraph::complement_connected() const {
    const int n = vertex_count();
    if (n <= 1) return true;
    std::vector<int> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w = 0; w < n; ++w)
            if (w != v && !seen[w] && !adjacent(v, w)) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

DefiningGraph make_defining_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    DefiningGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i));
    g.edges = edges;
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Words

bool WordOps::commute(int a, int b) const {
    int va = coxeter ? a : std::abs(a) - 1;
    int vb = coxeter ? b : std::abs(b) - 1;
    if (va == vb) return true;
    return graph->adjacent(va, vb);
}

Word WordOps::reduce(Word w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                bool cancels = coxeter ? (w[j] == w[i]) : (w[j] == -w[i]);
                if (cancels) {
                    bool clear = true;
                    for (std::size_t t = i + 1; t < j && clear; ++t)
                        clear = commute(w[t], w[i]);
                    if (clear) {
                        w.erase(w.begin() + j);
                        w.erase(w.begin() + i);
                        changed = true;
                        break;
                    }
                }
                if (!commute(w[j], w[i])) break;  // nothing past j can reach i
            }
        }
    }
    return w;
}

namespace {
// letter order: by vertex, generator before inverse
inline int letter_rank(int letter, bool coxeter) {
    if (coxeter) return letter;
    int v = std::abs(letter) - 1;
    return 2 * v + (letter < 0 ? 1 : 0);
}
}  // namespace

Word WordOps::canon(Word w) const {
    w = reduce(std::move(w));
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        int best = -1;
        for (std::size_t t = 0; t < w.size(); ++t) {
            bool movable = true;
            for (std::size_t s = 0; s < t && movable; ++s) movable = commute(w[s], w[t]);
            if (movable &&
                (best == -1 || letter_rank(w[t], coxeter) < letter_rank(w[best], coxeter)))
                best = static_cast<int>(t);
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

Word WordOps::inverse(const Word& w) const {
    Word out(w.rbegin(), w.rend());
    if (!coxeter)
        for (int& l : out) l = -l;
    return out;
}

Word WordOps::canon_concat(const Word& a, const Word& b) const {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return canon(std::move(w));
}

int WordOps::length_after_letter(const Word& w, int letter) const {
    // reduce(w + letter) can only cancel the appended letter against the
    // rightmost matching letter whose suffix commutes with it
    for (std::size_t t = w.size(); t-- > 0;) {
        bool cancels = coxeter ? (w[t] == letter) : (w[t] == -letter);
        if (cancels) return static_cast<int>(w.size()) - 1;
        if (!commute(w[t], letter)) break;
    }
    return static_cast<int>(w.size()) + 1;
}

std::string WordOps::encode(const Word& w) {
    std::string s;
    for (int l : w) {
        s += std::to_string(l);
        s += ',';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Group balls

namespace {

std::vector<int> generator_letters(const DefiningGraph& g, bool coxeter) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (coxeter) {
            out.push_back(v);
        } else {
            out.push_back(v + 1);
            out.push_back(-(v + 1));
        }
    }
    return out;
}

GroupBall build_group_ball(const DefiningGraph& g, int radius, bool coxeter,
                           const BuildOptions& opts) {
    g.validate();
    if (radius < 1) throw error("group ball: radius must be at least 1");
    WordOps ops{&g, coxeter};
    const auto gens = generator_letters(g, coxeter);

    // 1. enumerate the ball by BFS over normal forms
    std::vector<Word> members{Word{}};
    std::unordered_map<std::string, int> index{{WordOps::encode({}), 0}};
    for (std::size_t head = 0; head < members.size(); ++head) {
        Word w = members[head];
        if (static_cast<int>(w.size()) == radius) continue;
        for (int s : gens) {
            Word nw = ops.canon_concat(w, Word{s});
            if (static_cast<int>(nw.size()) != static_cast<int>(w.size()) + 1) continue;
            std::string key = WordOps::encode(nw);
            if (index.count(key)) continue;
            index.emplace(std::move(key), static_cast<int>(members.size()));
            members.push_back(std::move(nw));
            if (members.size() > opts.vertex_budget)
                throw radius_error("group ball: vertex budget exceeded");
        }
    }
    const std::size_t ball_size = members.size();

    // 2. convex hull inside the Cayley graph.  A candidate z adjacent to a
    //    hull member c (across the edge hyperplane J) joins the hull iff some
    //    member x lies strictly closer to z than to c, i.e. beyond J.
    //    Hull vertices satisfy |word| <= dim * radius, which prunes cheaply.
    const int max_len = g.max_clique() * radius;
    struct Pending {
        int parent;                 // member index c
        std::vector<int> letters;   // generators with candidate c*s untested
        std::size_t cursor = 0;     // next member index to test against
    };
    std::deque<Pending> pending;
    auto schedule = [&](int c) {
        Pending p;
        p.parent = c;
        for (int s : gens) {
            Word z = ops.canon_concat(members[c], Word{s});
            if (static_cast<int>(z.size()) > max_len) continue;
            if (index.count(WordOps::encode(z))) continue;
            p.letters.push_back(s);
        }
        if (!p.letters.empty()) pending.push_back(std::move(p));
    };
    for (std::size_t c = 0; c < members.size(); ++c) schedule(static_cast<int>(c));

    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& p : pending) {
            if (p.letters.empty()) continue;
            const Word& cw = members[p.parent];
            while (p.cursor < members.size() && !p.letters.empty()) {
                Word xc = ops.canon_concat(ops.inverse(members[p.cursor]), cw);
                for (std::size_t li = 0; li < p.letters.size();) {
                    int s = p.letters[li];
                    if (ops.length_after_letter(xc, s) ==
                        static_cast<int>(xc.size()) - 1) {
                        // witness found: member cursor is beyond the edge hyperplane
                        Word z = ops.canon_concat(cw, Word{s});
                        std::string key = WordOps::encode(z);
                        if (!index.count(key)) {
                            index.emplace(key, static_cast<int>(members.size()));
                            members.push_back(z);
                            if (members.size() > opts.vertex_budget)
                                throw radius_error("group ball: hull budget exceeded");
                            schedule(static_cast<int>(members.size()) - 1);
                            progress = true;
                        }
                        p.letters.erase(p.letters.begin() + li);
                    } else {
                        ++li;
                    }
                }
                ++p.cursor;
            }
        }
    }

    // 3. Cayley edges among hull members
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < members.size(); ++v)
        for (int s : gens) {
            Word z = ops.canon_concat(members[v], Word{s});
            auto it = index.find(WordOps::encode(z));
            if (it != index.end() && static_cast<int>(v) < it->second)
                edges.emplace_back(static_cast<int>(v), it->second);
        }

    GroupBall ball;
    ball.complex = CubeComplex::build_from_graph(static_cast<int>(members.size()), edges);
    ball.graph = g;
    ball.radius = radius;
    ball.coxeter = coxeter;
    ball.words = std::move(members);
    ball.index = std::move(index);
    ball.ball_members = ball.complex.empty_vertex_set();
    for (std::size_t v = 0; v < ball_size; ++v) ball.ball_members.set(v);
    return ball;
}

}  // namespace

int GroupBall::vertex_of(const Word& w) const {
    auto it = index.find(WordOps::encode(w));
    return it == index.end() ? -1 : it->second;
}

GroupBall racg_ball(const DefiningGraph& g, int radius, const BuildOptions& opts) {
    return build_group_ball(g, radius, true, opts);
}

GroupBall raag_ball(const DefiningGraph& g, int radius, const BuildOptions& opts) {
    return build_group_ball(g, radius, false, opts);
}

// ---------------------------------------------------------------------------
// Graph braid complexes

namespace {

struct TokenComplex {
    std::vector<std::vector<int>> configs;     // sorted token positions
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    std::map<std::vector<int>, int> index;

    // the moved tokens of an edge, as {from, to}
    std::pair<int, int> move(int a, int b) const {
        const auto& ca = configs[a];
        const auto& cb = configs[b];
        int from = -1, to = -1;
        for (int t : ca)
            if (!std::binary_search(cb.begin(), cb.end(), t)) from = t;
        for (int t : cb)
            if (!std::binary_search(ca.begin(), ca.end(), t)) to = t;
        return {from, to};
    }
};

TokenComplex token_complex(const DefiningGraph& g, int n, std::size_t budget) {
    TokenComplex tc;
    const int nv = g.vertex_count();
    if (n < 1 || n > nv) throw error("graph braid: strand count out of range");
    std::vector<int> pick(n);
    // enumerate sorted n-subsets
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            tc.index.emplace(pick, static_cast<int>(tc.configs.size()));
            tc.configs.push_back(pick);
            if (tc.configs.size() > budget) throw radius_error("graph braid: budget exceeded");
            return;
        }
        for (int v = start; v < nv; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);

    tc.adj.assign(tc.configs.size(), {});
    for (std::size_t i = 0; i < tc.configs.size(); ++i) {
        const auto& c = tc.configs[i];
        for (int from : c)
            for (auto& [ea, eb] : g.edges) {
                int to = (ea == from) ? eb : (eb == from ? ea : -1);
                if (to == -1) continue;
                if (std::binary_search(c.begin(), c.end(), to)) continue;
                std::vector<int> nc;
                for (int t : c)
                    if (t != from) nc.push_back(t);
                nc.push_back(to);
                std::sort(nc.begin(), nc.end());
                auto it = tc.index.find(nc);
                int j = it->second;
                if (static_cast<int>(i) < j) {
                    tc.edges.emplace_back(static_cast<int>(i), j);
                    tc.adj[i].push_back(j);
                    tc.adj[j].push_back(static_cast<int>(i));
                }
            }
    }
    return tc;
}

bool tokens_disjoint(std::pair<int, int> m1, std::pair<int, int> m2) {
    return m1.first != m2.first && m1.first != m2.second && m1.second != m2.first &&
           m1.second != m2.second;
}

// every 4-cycle of the skeleton must be a genuine token square for the base
// complex to carry the CAT(0) cube structure
bool squares_are_token_squares(const TokenComplex& tc) {
    for (std::size_t v = 0; v < tc.configs.size(); ++v) {
        const auto& nb = tc.adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t k = i + 1; k < nb.size(); ++k) {
                int a = nb[i], b = nb[k];
                // common neighbor w != v closes a 4-cycle
                for (int w : tc.adj[a]) {
                    if (w == static_cast<int>(v)) continue;
                    if (std::find(tc.adj[b].begin(), tc.adj[b].end(), w) == tc.adj[b].end())
                        continue;
                    auto m1 = tc.move(static_cast<int>(v), a);
                    auto m2 = tc.move(static_cast<int>(v), b);
                    if (!tokens_disjoint(m1, m2)) return false;
                }
            }
    }
    return true;
}

bool is_median_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    try {
        CubeComplex::build_from_graph(n, edges);
        return true;
    } catch (const error&) {
        return false;
    }
}

DefiningGraph subdivide(const DefiningGraph& g, int factor) {
    DefiningGraph out;
    out.labels = g.labels;
    int next = g.vertex_count();
    for (auto& [a, b] : g.edges) {
        int prev = a;
        for (int k = 1; k < factor; ++k) {
            out.labels.push_back("s" + std::to_string(next));
            out.edges.emplace_back(prev, next);
            prev = next++;
        }
        out.edges.emplace_back(prev, b);
    }
    return out;
}

// Subdivision conditions for the discretised model: chains between branch
// vertices (degree >= 3) of length >= n-1, cycles of length >= n+1.
bool sufficiently_subdivided(const DefiningGraph& g, int n) {
    if (n == 1) return true;
    const int nv = g.vertex_count();
    std::vector<std::vector<int>> adj(nv);
    for (auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < nv; ++v) {
        if (adj[v].size() < 3) continue;
        for (int w0 : adj[v]) {
            int prev = v, cur = w0, len = 1;
            while (adj[cur].size() == 2) {
                int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (adj[cur].size() >= 3 && len < n - 1) return false;
        }
    }
    // girth via BFS
    for (int v = 0; v < nv; ++v) {
        std::vector<int> dist(nv, -1), par(nv, -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push(w);
                } else if (w != par[u]) {
                    int cyc = dist[u] + dist[w] + 1;
                    if (cyc < n + 1) return false;
                }
            }
        }
    }
    return true;
}

// Universal cover ball via paths up to square moves and backtracking.
struct CoverBuilder {
    const TokenComplex* tc;
    std::size_t budget;

    // fourth corner of the token square through x - y - z, or -1
    int square_across(int x, int y, int z) const {
        auto m1 = tc->move(y, x);  // undoes x->y
        auto m2 = tc->move(y, z);
        if (!tokens_disjoint(m1, m2)) return -1;
        // apply m2 to x
        std::vector<int> c = tc->configs[x];
        for (int& t : c)
            if (t == m2.first) t = m2.second;
        std::sort(c.begin(), c.end());
        auto it = tc->index.find(c);
        return it == tc->index.end() ? -1 : it->second;
    }

    // canonical representative of the homotopy class of a reduced edge path
    std::vector<int> canonize(std::vector<int> path) const {
    restart:
        std::set<std::vector<int>> orbit{path};
        std::deque<std::vector<int>> queue{path};
        std::vector<int> best = path;
        while (!queue.empty()) {
            std::vector<int> p = queue.front();
            queue.pop_front();
            if (p < best) best = p;
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                if (p[i - 1] == p[i + 1]) {  // backtrack: cut it and start over
                    path = p;
                    path.erase(path.begin() + i, path.begin() + i + 2);
                    goto restart;
                }
                int alt = square_across(p[i - 1], p[i], p[i + 1]);
                if (alt != -1 && alt != p[i]) {
                    std::vector<int> np = p;
                    np[i] = alt;
                    if (orbit.insert(np).second) {
                        if (orbit.size() > budget)
                            throw budget_error("cover: path orbit too large");
                        queue.push_back(np);
                    }
                }
            }
        }
        return best;
    }
};

}  // namespace

BraidComplexResult graph_braid_complex(const DefiningGraph& top, int n,
                                       const BraidOptions& opts) {
    top.validate();
    DefiningGraph g = top;
    int factor = 1;
    if (!sufficiently_subdivided(g, n)) {
        if (!opts.auto_subdivide)
            throw not_subdivided_error("graph braid: topological graph is not subdivided enough");
        factor = n + 1;
        g = subdivide(top, factor);
    }

    TokenComplex tc = token_complex(g, n, opts.vertex_budget);
    if (tc.configs.empty()) throw error("graph braid: empty configuration space");

    BraidComplexResult out;
    out.subdivision_factor = factor;

    bool connected = true;
    {
        std::vector<int> seen(tc.configs.size(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        std::size_t reach = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : tc.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reach;
                    q.push(w);
                }
        }
        connected = reach == tc.configs.size();
    }
    if (!connected) throw disconnected_error("graph braid: configuration space is disconnected");

    if (squares_are_token_squares(tc) &&
        is_median_graph(static_cast<int>(tc.configs.size()), tc.edges)) {
        out.complex = CubeComplex::build_from_graph(static_cast<int>(tc.configs.size()), tc.edges);
        out.base_is_cat0 = true;
        out.configs = tc.configs;
        return out;
    }

    // Universal-cover ball: BFS over canonical homotopy classes of paths,
    // then the convex hull of the requested ball inside a larger one.
    CoverBuilder cb{&tc, opts.vertex_budget};
    const int want = opts.cover_radius;
    // hull of B_r sits inside B_{dim*r}, and dim is at most the strand count
    const int ambient = std::min(n, 3) * want;

    std::map<std::vector<int>, int> cindex;
    std::vector<std::vector<int>> cpaths;
    std::vector<std::pair<int, int>> cedges;
    std::vector<int> clevel;
    cpaths.push_back({0});
    cindex.emplace(cpaths[0], 0);
    clevel.push_back(0);
    for (std::size_t head = 0; head < cpaths.size(); ++head) {
        if (clevel[head] == ambient) continue;
        std::vector<int> p = cpaths[head];
        int endpoint = p.back();
        for (int w : tc.adj[endpoint]) {
            std::vector<int> np = p;
            np.push_back(w);
            np = cb.canonize(np);
            auto it = cindex.find(np);
            int id;
            if (it == cindex.end()) {
                id = static_cast<int>(cpaths.size());
                cindex.emplace(np, id);
                cpaths.push_back(np);
                clevel.push_back(static_cast<int>(np.size()) - 1);
                if (cpaths.size() > opts.vertex_budget)
                    throw radius_error("graph braid: cover budget exceeded");
            } else {
                id = it->second;
            }
            if (id != static_cast<int>(head)) {
                int a = static_cast<int>(head), b = id;
                cedges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(cedges.begin(), cedges.end());
    cedges.erase(std::unique(cedges.begin(), cedges.end()), cedges.end());

    // hull of the radius-`want` ball, via BFS frontier tests in the ambient
    std::vector<std::vector<int>> cadj(cpaths.size());
    for (auto& [a, b] : cedges) {
        cadj[a].push_back(b);
        cadj[b].push_back(a);
    }
    std::vector<char> in_hull(cpaths.size(), 0);
    for (std::size_t v = 0; v < cpaths.size(); ++v)
        if (clevel[v] <= want) in_hull[v] = 1;
    bool grew = true;
    auto bfs_from = [&](int src) {
        std::vector<int> dist(cpaths.size(), -1);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : cadj[v])
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        return dist;
    };
    while (grew) {
        grew = false;
        for (std::size_t z = 0; z < cpaths.size(); ++z) {
            if (in_hull[z]) continue;
            bool adj_hull = false;
            for (int c : cadj[z]) adj_hull = adj_hull || in_hull[c];
            if (!adj_hull) continue;
            auto dz = bfs_from(static_cast<int>(z));
            for (int c : cadj[z]) {
                if (!in_hull[c] || in_hull[z]) continue;
                auto dc = bfs_from(c);
                // z joins the hull iff some member sits strictly closer to z
                // than to c, i.e. beyond the edge hyperplane
                for (std::size_t x = 0; x < cpaths.size() && !in_hull[z]; ++x)
                    if (in_hull[x] && dz[x] >= 0 && dc[x] >= 0 && dz[x] < dc[x]) {
                        in_hull[z] = 1;
                        grew = true;
                    }
            }
        }
    }

    std::vector<int> remap(cpaths.size(), -1);
    int nv = 0;
    for (std::size_t v = 0; v < cpaths.size(); ++v)
        if (in_hull[v]) remap[v] = nv++;
    std::vector<std::pair<int, int>> hedges;
    for (auto& [a, b] : cedges)
        if (remap[a] != -1 && remap[b] != -1) hedges.emplace_back(remap[a], remap[b]);

    out.complex = CubeComplex::build_from_graph(nv, hedges);
    out.base_is_cat0 = false;
    out.cover_truncated = true;
    return out;
}

// ---------------------------------------------------------------------------
// Products and fixtures

CubeComplex product(const CubeComplex& a, const CubeComplex& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    auto id = [nb](int i, int j) { return i * nb + j; };
    std::vector<std::pair<int, int>> edges;
    for (auto& [u, v] : a.edges())
        for (int j = 0; j < nb; ++j) edges.emplace_back(id(u, j), id(v, j));
    for (auto& [u, v] : b.edges())
        for (int i = 0; i < na; ++i) edges.emplace_back(id(i, u), id(i, v));
    CubeComplex p = CubeComplex::build_from_graph(na * nb, edges);
    if (p.hyperplane_count() != a.hyperplane_count() + b.hyperplane_count())
        throw error("product: hyperplane count is not the sum of the factors'");
    return p;
}

CubeComplex path_complex(int n_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_edges; ++i) edges.emplace_back(i, i + 1);
    return CubeComplex::build_from_graph(n_edges + 1, edges);
}

CubeComplex grid_complex(int p, int q) {
    auto id = [q](int i, int j) { return i * (q + 1) + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            if (i < p) edges.emplace_back(id(i, j), id(i + 1, j));
            if (j < q) edges.emplace_back(id(i, j), id(i, j + 1));
        }
    return CubeComplex::build_from_graph((p + 1) * (q + 1), edges);
}

CubeComplex hypercube_complex(int dim) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < (1 << dim); ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
    return CubeComplex::build_from_graph(1 << dim, edges);
}

CubeComplex staircase_complex(int squares) {
    // unit squares at (0,0), (1,0), (1,1), (2,1), (2,2), ... : one step right,
    // one step up, alternating
    std::set<std::pair<int, int>> cells;
    int cx = 0, cy = 0;
    cells.emplace(cx, cy);
    for (int s = 1; s < squares; ++s) {
        if (s % 2 == 1)
            ++cx;
        else
            ++cy;
        cells.emplace(cx, cy);
    }
    std::map<std::pair<int, int>, int> vid;
    auto vertex = [&](int x, int y) {
        auto [it, fresh] = vid.emplace(std::make_pair(x, y), static_cast<int>(vid.size()));
        (void)fresh;
        return it->second;
    };
    std::set<std::pair<int, int>> edge_set;
    for (auto& [x, y] : cells) {
        int a = vertex(x, y), b = vertex(x + 1, y), c = vertex(x + 1, y + 1), d = vertex(x, y + 1);
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {d, c}, {a, d}})
            edge_set.emplace(std::minmax(u, v));
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    return CubeComplex::build_from_graph(static_cast<int>(vid.size()), edges);
}

CubeComplex tripod_complex() {
    return CubeComplex::build_from_graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace cubex
