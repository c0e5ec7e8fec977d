#pragma once

// Test-only brute-force oracles.  These deliberately avoid the library's
// signature machinery: geodesics are enumerated over the raw adjacency, so
// they can certify the signature-based implementations independently.

#include <algorithm>
#include <set>
#include <vector>

#include "cubex/complex.hpp"

namespace oracles {

inline std::vector<std::vector<int>> all_pairs_bfs(const cubex::CubeComplex& x) {
    std::vector<std::vector<int>> d(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) d[v] = x.bfs_distances(v);
    return d;
}

// every geodesic edge path from u to v (graph search, exponential; tiny inputs)
inline void all_geodesics_rec(const cubex::CubeComplex& x,
                              const std::vector<std::vector<int>>& dist, int v,
                              std::vector<int>& path, std::vector<std::vector<int>>& out) {
    int cur = path.back();
    if (cur == v) {
        out.push_back(path);
        return;
    }
    for (int w : x.neighbors(cur))
        if (dist[w][v] == dist[cur][v] - 1) {
            path.push_back(w);
            all_geodesics_rec(x, dist, v, path, out);
            path.pop_back();
        }
}

inline std::vector<std::vector<int>> all_geodesics(const cubex::CubeComplex& x, int u, int v) {
    auto dist = all_pairs_bfs(x);
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    all_geodesics_rec(x, dist, v, path, out);
    return out;
}

inline std::set<int> interval_by_geodesics(const cubex::CubeComplex& x, int u, int v) {
    std::set<int> out;
    for (const auto& g : all_geodesics(x, u, v)) out.insert(g.begin(), g.end());
    return out;
}

// vertices lying on geodesics between all three pairs
inline std::vector<int> medians_by_geodesics(const cubex::CubeComplex& x, int a, int b, int c) {
    auto dist = all_pairs_bfs(x);
    std::vector<int> out;
    for (int m = 0; m < x.vertex_count(); ++m)
        if (dist[a][m] + dist[m][b] == dist[a][b] && dist[b][m] + dist[m][c] == dist[b][c] &&
            dist[a][m] + dist[m][c] == dist[a][c])
            out.push_back(m);
    return out;
}

// exhaustive cell-by-cell search for an isometric (p+1) x (q+1) grid embedding
inline bool embeds_rectangle(const cubex::CubeComplex& x, int p, int q) {
    auto dist = all_pairs_bfs(x);
    const int w = p + 1, h = q + 1;
    std::vector<int> cell(static_cast<std::size_t>(w) * h, -1);
    auto at = [&](int i, int j) -> int& { return cell[static_cast<std::size_t>(i) * h + j]; };
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == w * h) return true;
        int i = idx / h, j = idx % h;
        for (int v = 0; v < x.vertex_count(); ++v) {
            bool ok = true;
            for (int t = 0; t < idx && ok; ++t) {
                int ti = t / h, tj = t % h;
                ok = dist[cell[t]][v] == std::abs(ti - i) + std::abs(tj - j);
            }
            if (!ok) continue;
            at(i, j) = v;
            if (self(self, idx + 1)) return true;
            at(i, j) = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int thickness_by_embedding(const cubex::CubeComplex& x, int cap) {
    int k = 0;
    while (k < cap && embeds_rectangle(x, k + 1, k + 1)) ++k;
    return k;
}

}  // namespace oracles
