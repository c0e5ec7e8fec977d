#include "cubex/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace cubex {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CubeComplex CubeComplex::build_from_graph(int n_vertices,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const VerifyOptions& opts) {
    if (n_vertices <= 0) throw error("build_from_graph: empty vertex set");
    CubeComplex x;
    x.n_ = n_vertices;
    x.edges_ = edges;
    x.adj_.assign(n_vertices, {});
    x.adj_class_.assign(n_vertices, {});

    std::vector<std::vector<bool>> seen(n_vertices);
    for (auto& row : seen) row.assign(n_vertices, false);
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices)
            throw error("build_from_graph: edge endpoint out of range");
        if (a == b) throw error("build_from_graph: loop edge");
        if (seen[a][b]) throw error("build_from_graph: duplicate edge");
        seen[a][b] = seen[b][a] = true;
        x.adj_[a].push_back(b);
        x.adj_[b].push_back(a);
    }

    // connectivity + bipartiteness in one sweep
    std::vector<int> color(n_vertices, -1);
    std::queue<int> q;
    q.push(0);
    color[0] = 0;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : x.adj_[v]) {
            if (color[w] == -1) {
                color[w] = color[v] ^ 1;
                ++reached;
                q.push(w);
            } else if (color[w] == color[v]) {
                throw not_median_error("input graph is not bipartite");
            }
        }
    }
    if (reached != n_vertices) throw disconnected_error("input graph is disconnected");

    x.extract_hyperplanes();

    VerifyReport rep = verify_complex(x, opts);
    if (!rep.passed) {
        if (rep.failure.find("halfspace") != std::string::npos)
            throw inconsistent_halfspace_error(rep.failure);
        throw not_median_error(rep.failure);
    }

    x.compute_relations();
    x.compute_dimension();
    return x;
}

void CubeComplex::extract_hyperplanes() {
    const int m = edge_count();
    // edge lookup for the square scan
    std::unordered_map<std::int64_t, int> edge_id;
    auto key = [this](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::int64_t>(a) * n_ + b;
    };
    for (int e = 0; e < m; ++e) edge_id[key(edges_[e].first, edges_[e].second)] = e;

    // Square closure: opposite edges of any 4-cycle a-b-d-c-a are parallel.
    UnionFind uf(m);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = edges_[e];
        for (int c : adj_[a]) {
            if (c == b) continue;
            for (int d : adj_[b]) {
                if (d == a || d == c) continue;
                auto it = edge_id.find(key(c, d));
                if (it != edge_id.end()) uf.unite(e, it->second);
            }
        }
    }

    std::vector<int> root_to_class(m, -1);
    edge_class_.assign(m, -1);
    int n_classes = 0;
    for (int e = 0; e < m; ++e) {
        int r = uf.find(e);
        if (root_to_class[r] == -1) root_to_class[r] = n_classes++;
        edge_class_[e] = root_to_class[r];
    }

    hyperplanes_.assign(n_classes, {});
    for (int j = 0; j < n_classes; ++j) {
        hyperplanes_[j].id = j;
        hyperplanes_[j].halfspace_plus = Bitset(n_);
        hyperplanes_[j].halfspace_minus = Bitset(n_);
        hyperplanes_[j].carrier = Bitset(n_);
    }
    for (int e = 0; e < m; ++e) {
        auto& h = hyperplanes_[edge_class_[e]];
        h.edge_class.push_back(e);
        h.carrier.set(edges_[e].first);
        h.carrier.set(edges_[e].second);
    }

    // Halfspaces: deleting a class must leave exactly two components, and
    // every dual edge must straddle them.  Orientation convention: the side
    // containing vertex 0 is "minus", so signature(0) == 0.
    std::vector<char> in_class(m, 0);
    std::vector<int> side(n_);
    for (int j = 0; j < n_classes; ++j) {
        auto& h = hyperplanes_[j];
        for (int e : h.edge_class) in_class[e] = 1;

        std::fill(side.begin(), side.end(), -1);
        int covered = 0;
        for (int start : {0, edges_[h.edge_class[0]].first, edges_[h.edge_class[0]].second}) {
            if (side[start] != -1) continue;
            int label = (covered == 0) ? 0 : 1;
            std::queue<int> q;
            q.push(start);
            side[start] = label;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (std::size_t k = 0; k < adj_[v].size(); ++k) {
                    // adjacency edge index: recover via lookup
                    int w = adj_[v][k];
                    auto it = edge_id.find(key(v, w));
                    if (in_class[it->second]) continue;
                    if (side[w] == -1) {
                        side[w] = label;
                        q.push(w);
                    }
                }
            }
            ++covered;
            if (covered == 2) break;
        }
        for (int v = 0; v < n_; ++v) {
            if (side[v] == -1)
                throw inconsistent_halfspace_error(
                    "hyperplane " + std::to_string(j) + ": removal leaves more than two components");
        }
        for (int e : h.edge_class) {
            if (side[edges_[e].first] == side[edges_[e].second])
                throw inconsistent_halfspace_error(
                    "hyperplane " + std::to_string(j) + ": dual edge does not cross it");
        }
        for (int v = 0; v < n_; ++v) {
            if (side[v] == 0)
                h.halfspace_minus.set(v);
            else
                h.halfspace_plus.set(v);
        }
        for (int e : h.edge_class) in_class[e] = 0;
    }

    signatures_.assign(n_, Bitset(n_classes));
    for (int j = 0; j < n_classes; ++j)
        for (int v = 0; v < n_; ++v)
            if (hyperplanes_[j].halfspace_plus.test(v)) signatures_[v].set(j);

    sig_index_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
        auto [it, fresh] = sig_index_.emplace(signatures_[v], v);
        if (!fresh)
            throw not_median_error("signatures are not injective (vertices " +
                                   std::to_string(it->second) + ", " + std::to_string(v) + ")");
    }

    adj_class_ = adj_;
    for (int v = 0; v < n_; ++v)
        for (std::size_t k = 0; k < adj_[v].size(); ++k)
            adj_class_[v][k] = edge_class_[edge_id[key(v, adj_[v][k])]];
}

void CubeComplex::compute_relations() {
    const int h = hyperplane_count();
    relation_.assign(h, std::vector<HypRel>(h, HypRel::Equal));
    for (int j = 0; j < h; ++j) {
        const auto& pj = hyperplanes_[j].halfspace_plus;
        const auto& mj = hyperplanes_[j].halfspace_minus;
        for (int k = 0; k < h; ++k) {
            if (j == k) continue;
            const auto& pk = hyperplanes_[k].halfspace_plus;
            const auto& mk = hyperplanes_[k].halfspace_minus;
            bool pp = pj.intersects(pk), pm = pj.intersects(mk);
            bool mp = mj.intersects(pk), mm = mj.intersects(mk);
            if (pp && pm && mp && mm) {
                relation_[j][k] = HypRel::Transverse;
            } else {
                // carrier of k lies in one halfspace of j
                relation_[j][k] = hyperplanes_[k].carrier.is_subset_of(pj) ? HypRel::InPlus
                                                                           : HypRel::InMinus;
            }
        }
    }
}

void CubeComplex::compute_dimension() {
    // Max clique in the transversality relation among hyperplanes incident to
    // a common vertex; equals the maximal cube dimension.
    dimension_ = 0;
    for (int v = 0; v < n_; ++v) {
        std::vector<int> local = adj_class_[v];
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        const int k = static_cast<int>(local.size());
        if (k <= dimension_) continue;
        std::vector<std::uint64_t> mask(k, 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b && transverse(local[a], local[b])) mask[a] |= 1ULL << b;
        // branch and bound max clique on <= 64 local hyperplanes
        int best = dimension_;
        std::uint64_t all = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
        auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
            if (size + std::popcount(cand) <= best) return;
            if (cand == 0) {
                best = std::max(best, size);
                return;
            }
            int a = std::countr_zero(cand);
            self(self, cand & ~(1ULL << a), size);                  // skip a
            self(self, cand & mask[a] & ~(1ULL << a), size + 1);    // take a
        };
        rec(rec, all, 0);
        dimension_ = best;
    }
}

int CubeComplex::vertex_by_signature(const Bitset& sig) const {
    auto it = sig_index_.find(sig);
    return it == sig_index_.end() ? -1 : it->second;
}

int CubeComplex::median(int x, int y, int z) const {
    const Bitset& a = signatures_[x];
    const Bitset& b = signatures_[y];
    const Bitset& c = signatures_[z];
    Bitset maj = (a & b) | (b & c) | (a & c);
    int m = vertex_by_signature(maj);
    if (m == -1) throw not_median_error("majority signature is not realised by a vertex");
    return m;
}

bool CubeComplex::separates(int j, int h1, int h2) const {
    if (j == h1 || j == h2 || h1 == h2)
        throw not_distinct_error("separates: hyperplanes must be distinct");
    HypRel r1 = relation_[j][h1];
    HypRel r2 = relation_[j][h2];
    if (r1 == HypRel::Transverse || r2 == HypRel::Transverse) return false;
    return r1 != r2;
}

Bitset CubeComplex::interval_bitset(int x, int y) const {
    const Bitset& sx = signatures_[x];
    const Bitset& sy = signatures_[y];
    Bitset diff = sx ^ sy;
    Bitset out(n_);
    for (int v = 0; v < n_; ++v) {
        // v lies between x and y iff it agrees with them outside diff
        if (((signatures_[v] ^ sx) & ~diff).none()) out.set(v);
    }
    return out;
}

std::vector<int> CubeComplex::bfs_distances(int src) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// ---------------------------------------------------------------------------

VerifyReport verify_median_graph(int n_vertices,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const VerifyOptions& opts) {
    VerifyReport rep;
    std::vector<std::vector<int>> adj(n_vertices);
    for (auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::vector<int>> dist(n_vertices);
    for (int v = 0; v < n_vertices; ++v) {
        dist[v].assign(n_vertices, -1);
        std::queue<int> q;
        dist[v][v] = 0;
        q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (dist[v][w] == -1) {
                    dist[v][w] = dist[v][u] + 1;
                    q.push(w);
                }
        }
    }
    for (int v = 0; v < n_vertices; ++v)
        for (int w = 0; w < n_vertices; ++w)
            if (dist[v][w] == -1) {
                rep.passed = false;
                rep.failure = "graph is disconnected";
                return rep;
            }

    auto medians_of = [&](int x, int y, int z) {
        int count = 0;
        for (int m = 0; m < n_vertices; ++m) {
            if (dist[x][m] + dist[m][y] == dist[x][y] &&
                dist[y][m] + dist[m][z] == dist[y][z] &&
                dist[x][m] + dist[m][z] == dist[x][z])
                ++count;
        }
        return count;
    };

    const std::size_t total =
        static_cast<std::size_t>(n_vertices) * (n_vertices - 1) * (n_vertices - 2) / 6;
    if (total <= opts.triple_budget) {
        for (int x = 0; x < n_vertices; ++x)
            for (int y = x + 1; y < n_vertices; ++y)
                for (int z = y + 1; z < n_vertices; ++z) {
                    int c = medians_of(x, y, z);
                    if (c != 1) {
                        rep.passed = false;
                        rep.failure = "triple with " + std::to_string(c) + " medians";
                        rep.witness = {x, y, z};
                        rep.median_count = c;
                        return rep;
                    }
                }
    } else {
        rep.exhaustive_triples = false;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> pick(0, n_vertices - 1);
        for (std::size_t t = 0; t < opts.triple_budget; ++t) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (x == y || y == z || x == z) continue;
            int c = medians_of(x, y, z);
            if (c != 1) {
                rep.passed = false;
                rep.failure = "triple with " + std::to_string(c) + " medians (sampled)";
                rep.witness = {x, y, z};
                rep.median_count = c;
                return rep;
            }
        }
    }
    return rep;
}

VerifyReport verify_complex(const CubeComplex& x, const VerifyOptions& opts) {
    VerifyReport rep;
    const int n = x.vertex_count();
    const int h = x.hyperplane_count();

    // halfspaces partition the vertices
    for (int j = 0; j < h; ++j) {
        const auto& hp = x.hyperplane(j);
        if ((hp.halfspace_plus & hp.halfspace_minus).any() ||
            (hp.halfspace_plus | hp.halfspace_minus).count() != static_cast<std::size_t>(n) ||
            hp.halfspace_plus.none() || hp.halfspace_minus.none()) {
            rep.passed = false;
            rep.failure = "halfspace pair of hyperplane " + std::to_string(j) +
                          " does not partition the vertex set";
            return rep;
        }
    }

    // signature distance == BFS distance (exhaustive below the pair budget)
    std::mt19937_64 rng(opts.seed);
    std::size_t pairs = static_cast<std::size_t>(n) * n;
    std::vector<int> sources;
    if (pairs <= opts.pair_budget) {
        sources.resize(n);
        std::iota(sources.begin(), sources.end(), 0);
    } else {
        rep.exhaustive_pairs = false;
        std::size_t k = std::max<std::size_t>(1, opts.pair_budget / n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (std::size_t i = 0; i < k; ++i) sources.push_back(pick(rng));
    }
    for (int s : sources) {
        auto dist = x.bfs_distances(s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                rep.passed = false;
                rep.failure = "graph is disconnected";
                return rep;
            }
            if (dist[v] != x.distance_l1(s, v)) {
                rep.passed = false;
                rep.failure = "signature distance disagrees with BFS distance";
                rep.witness = {s, v, -1};
                return rep;
            }
        }
    }

    // squares are spanned by transverse (distinct) hyperplanes
    for (int v = 0; v < n; ++v) {
        const auto& nb = x.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t k = i + 1; k < nb.size(); ++k) {
                int a = nb[i], b = nb[k];
                Bitset target = x.signature(a) ^ x.signature(b) ^ x.signature(v);
                int w = x.vertex_by_signature(target);
                bool square = (w != -1) && x.distance_l1(v, w) == 2 &&
                              x.distance_l1(a, w) == 1 && x.distance_l1(b, w) == 1;
                if (!square) continue;
                int ja = x.incident_hyperplane(v, static_cast<int>(i));
                int jb = x.incident_hyperplane(v, static_cast<int>(k));
                if (ja == jb) {
                    rep.passed = false;
                    rep.failure = "square with both sides in one hyperplane class";
                    rep.witness = {v, a, b};
                    return rep;
                }
                const auto& pa = x.hyperplane(ja).halfspace_plus;
                const auto& pb = x.hyperplane(jb).halfspace_plus;
                bool pp = pa.intersects(pb), pm = pa.intersects(~pb);
                bool mp = (~pa).intersects(pb), mm = (~pa).intersects(~pb);
                if (!(pp && pm && mp && mm)) {
                    rep.passed = false;
                    rep.failure = "square spanned by non-transverse hyperplanes";
                    rep.witness = {v, a, b};
                    return rep;
                }
            }
    }

    // median property: the majority signature of every triple is realised
    const std::size_t total =
        static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    auto check_triple = [&](int a, int b, int c) {
        Bitset maj = (x.signature(a) & x.signature(b)) | (x.signature(b) & x.signature(c)) |
                     (x.signature(a) & x.signature(c));
        return x.vertex_by_signature(maj) != -1;
    };
    if (total <= opts.triple_budget) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (!check_triple(a, b, c)) {
                        rep.passed = false;
                        rep.failure = "triple without a median vertex";
                        rep.witness = {a, b, c};
                        rep.median_count = 0;
                        return rep;
                    }
    } else {
        rep.exhaustive_triples = false;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (std::size_t t = 0; t < opts.triple_budget / 10; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || b == c || a == c) continue;
            if (!check_triple(a, b, c)) {
                rep.passed = false;
                rep.failure = "triple without a median vertex (sampled)";
                rep.witness = {a, b, c};
                rep.median_count = 0;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace cubex
