#include "cubex/convex.hpp"

#include <algorithm>
#include <queue>

namespace cubex {

namespace {

Bitset crossing_of(const CubeComplex& x, const Bitset& members) {
    Bitset out = x.empty_hyperplane_set();
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        const auto& h = x.hyperplane(j);
        if (h.halfspace_plus.intersects(members) && h.halfspace_minus.intersects(members))
            out.set(j);
    }
    return out;
}

std::vector<int> to_list(const Bitset& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

Bitset hull_by_halfspaces(const CubeComplex& x, const Bitset& seed) {
    Bitset hull = x.full_vertex_set();
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        const auto& h = x.hyperplane(j);
        if (seed.is_subset_of(h.halfspace_plus))
            hull &= h.halfspace_plus;
        else if (seed.is_subset_of(h.halfspace_minus))
            hull &= h.halfspace_minus;
    }
    return hull;
}

// Frontier closure: a vertex z adjacent to a hull member c belongs to the
// hull iff some current member lies on z's side of the edge hyperplane.
Bitset hull_by_interval_closure(const CubeComplex& x, const Bitset& seed) {
    Bitset cur = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto v = cur.find_first(); v != Bitset::npos; v = cur.find_next(v)) {
            const auto& nb = x.neighbors(static_cast<int>(v));
            for (std::size_t k = 0; k < nb.size(); ++k) {
                int z = nb[k];
                if (cur.test(z)) continue;
                int j = x.incident_hyperplane(static_cast<int>(v), static_cast<int>(k));
                const auto& side =
                    x.vertex_in_plus(z, j) ? x.hyperplane(j).halfspace_plus
                                           : x.hyperplane(j).halfspace_minus;
                if (side.intersects(cur)) {
                    cur.set(z);
                    grew = true;
                }
            }
        }
    }
    return cur;
}

}  // namespace

ConvexSubcomplex convex_hull(const CubeComplex& x, const Bitset& seed) {
    if (seed.none()) throw empty_subcomplex_error("convex_hull: empty seed");
    Bitset a = hull_by_halfspaces(x, seed);
    Bitset b = hull_by_interval_closure(x, seed);
    if (a != b) throw error("convex_hull: halfspace and interval routes disagree");
    ConvexSubcomplex c;
    c.parent = &x;
    c.members = a;
    c.member_list = to_list(a);
    c.crossing = crossing_of(x, a);
    return c;
}

ConvexSubcomplex convex_hull(const CubeComplex& x, const std::vector<int>& seed) {
    Bitset b = x.empty_vertex_set();
    for (int v : seed) b.set(v);
    return convex_hull(x, b);
}

ConvexSubcomplex as_convex(const CubeComplex& x, const Bitset& members) {
    ConvexSubcomplex c = convex_hull(x, members);
    if (c.members != members) throw error("as_convex: vertex set is not convex");
    return c;
}

int gate_project(const CubeComplex& x, int v, const ConvexSubcomplex& c) {
    if (c.empty()) throw empty_subcomplex_error("gate_project: empty subcomplex");
    if (c.contains(v)) return v;
    int best = -1, best_d = -1;
    int ties = 0;
    for (int m : c.member_list) {
        int d = x.distance_l1(v, m);
        if (best == -1 || d < best_d) {
            best = m;
            best_d = d;
            ties = 1;
        } else if (d == best_d) {
            ++ties;
        }
    }
    if (ties != 1) throw error("gate_project: nearest member is not unique");
    // gate property: every separating hyperplane of (v, gate) separates v from c
    Bitset sep = x.separating_hyperplanes(v, best);
    for (auto j = sep.find_first(); j != Bitset::npos; j = sep.find_next(j)) {
        const auto& h = x.hyperplane(static_cast<int>(j));
        const auto& far_side = x.vertex_in_plus(v, static_cast<int>(j)) ? h.halfspace_minus
                                                                        : h.halfspace_plus;
        if (!c.members.is_subset_of(far_side))
            throw error("gate_project: gate property violated");
    }
    return best;
}

ConvexSubcomplex project_set(const CubeComplex& x, const ConvexSubcomplex& a,
                             const ConvexSubcomplex& b) {
    if (a.empty() || b.empty()) throw empty_subcomplex_error("project_set: empty subcomplex");
    Bitset image = x.empty_vertex_set();
    for (int v : a.member_list) image.set(gate_project(x, v, b));
    ConvexSubcomplex out = as_convex(x, image);
    if (out.crossing != (a.crossing & b.crossing))
        throw error("project_set: crossing set is not crossing(a) & crossing(b)");
    return out;
}

ConvexSubcomplex interval_subcomplex(const CubeComplex& x, int u, int v) {
    return as_convex(x, x.interval_bitset(u, v));
}

std::vector<int> canonical_geodesic(const CubeComplex& x, int u, int v) {
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        int d = x.distance_l1(cur, v);
        int next = -1;
        for (int w : x.neighbors(cur)) {
            if (x.distance_l1(w, v) != d - 1) continue;
            if (next == -1 || x.signature(w) < x.signature(next)) next = w;
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::vector<int> distances_to_set(const CubeComplex& x, const Bitset& set) {
    std::vector<int> dist(x.vertex_count(), -1);
    std::queue<int> q;
    for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
        dist[v] = 0;
        q.push(static_cast<int>(v));
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : x.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

Bitset FlatRectangle::vertex_set(const CubeComplex& x) const {
    Bitset out = x.empty_vertex_set();
    for (int v : grid) out.set(v);
    return out;
}

bool FlatRectangle::is_isometric(const CubeComplex& x) const {
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            for (int i2 = i; i2 <= p; ++i2)
                for (int j2 = 0; j2 <= q; ++j2) {
                    if (i2 == i && j2 < j) continue;
                    if (x.distance_l1(at(i, j), at(i2, j2)) !=
                        std::abs(i2 - i) + std::abs(j2 - j))
                        return false;
                }
    return true;
}

FlatRectangle rectangle_from_corners(const CubeComplex& x, int c00, int c10, int c11, int c01) {
    FlatRectangle r;
    r.p = x.distance_l1(c00, c10);
    r.q = x.distance_l1(c00, c01);
    r.grid.assign(static_cast<std::size_t>(r.p + 1) * (r.q + 1), -1);
    std::vector<int> row = canonical_geodesic(x, c00, c10);
    std::vector<int> col = canonical_geodesic(x, c00, c01);
    for (int i = 0; i <= r.p; ++i)
        for (int j = 0; j <= r.q; ++j) r.at(i, j) = x.median(row[i], col[j], c11);
    return r;
}

CycleRectangleResult cycle_rectangle(const CubeComplex& x, const ConvexSubcomplex& a,
                                     const ConvexSubcomplex& b, const ConvexSubcomplex& c,
                                     const ConvexSubcomplex& d) {
    Bitset ab = a.members & b.members, bc = b.members & c.members;
    Bitset cd = c.members & d.members, da = d.members & a.members;
    if (ab.none() || bc.none() || cd.none() || da.none())
        throw not_a_cycle_error("cycle_rectangle: consecutive subcomplexes must intersect");

    // base corner: vertex of A & D nearest to B & C, smallest signature on ties
    auto bc_dist = distances_to_set(x, bc);
    int base = -1;
    for (auto v = da.find_first(); v != Bitset::npos; v = da.find_next(v)) {
        int vi = static_cast<int>(v);
        if (base == -1 || bc_dist[vi] < bc_dist[base] ||
            (bc_dist[vi] == bc_dist[base] && x.signature(vi) < x.signature(base)))
            base = vi;
    }

    ConvexSubcomplex bc_sub = as_convex(x, bc);
    int corner_b = gate_project(x, base, b);
    int corner_c = gate_project(x, base, bc_sub);
    int corner_d = gate_project(x, base, c);

    FlatRectangle r = rectangle_from_corners(x, base, corner_b, corner_c, corner_d);
    if (!r.is_isometric(x)) throw error("cycle_rectangle: embedding is not isometric");

    for (int i = 0; i <= r.p; ++i)
        if (!a.contains(r.at(i, 0))) throw error("cycle_rectangle: bottom side leaves a");
    for (int j = 0; j <= r.q; ++j)
        if (!b.contains(r.at(r.p, j))) throw error("cycle_rectangle: right side leaves b");
    for (int i = 0; i <= r.p; ++i)
        if (!c.contains(r.at(i, r.q))) throw error("cycle_rectangle: top side leaves c");
    for (int j = 0; j <= r.q; ++j)
        if (!d.contains(r.at(0, j))) throw error("cycle_rectangle: left side leaves d");

    // hyperplanes crossing the bottom (resp. left) side avoid b and d (resp. a and c)
    Bitset bottom = x.separating_hyperplanes(r.at(0, 0), r.at(r.p, 0));
    if (bottom.intersects(b.crossing) || bottom.intersects(d.crossing))
        throw error("cycle_rectangle: bottom-side hyperplane meets b or d");
    Bitset left = x.separating_hyperplanes(r.at(0, 0), r.at(0, r.q));
    if (left.intersects(a.crossing) || left.intersects(c.crossing))
        throw error("cycle_rectangle: left-side hyperplane meets a or c");

    return CycleRectangleResult{std::move(r), base};
}

QuadrupleGrid quadruple_grid(const CubeComplex& x, int x1, int x2, int x3, int x4) {
    const std::array<int, 4> xs{x1, x2, x3, x4};

    // Helly core: inside the hull, on the majority side of every hyperplane
    // isolating a single x_i, and on the {x2, x4} side of every diagonal
    // split.  Each constraining halfspace holds at least two of the four
    // points, so any two of them share one; Helly gives a nonempty core.
    Bitset core = x.full_vertex_set();
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        const auto& h = x.hyperplane(j);
        int in_plus = 0;
        for (int v : xs) in_plus += x.vertex_in_plus(v, j) ? 1 : 0;
        if (in_plus <= 1) core &= h.halfspace_minus;
        if (in_plus >= 3) core &= h.halfspace_plus;
        if (in_plus == 2) {
            bool plus_is_24 = x.vertex_in_plus(x2, j) && x.vertex_in_plus(x4, j);
            bool minus_is_24 = !x.vertex_in_plus(x2, j) && !x.vertex_in_plus(x4, j);
            if (plus_is_24) core &= h.halfspace_plus;
            if (minus_is_24) core &= h.halfspace_minus;
        }
    }
    if (core.none()) throw error("quadruple_grid: Helly core is empty");

    QuadrupleGrid out;
    ConvexSubcomplex q = as_convex(x, core);
    for (int i = 0; i < 4; ++i) out.m[i] = gate_project(x, xs[i], q);

    // side counts from the separation patterns: by the projection lemma,
    // d(m1,m2) counts the hyperplanes with {x1,x4} | {x2,x3} and d(m2,m3)
    // those with {x1,x2} | {x3,x4}
    for (int j = 0; j < x.hyperplane_count(); ++j) {
        bool b1 = x.vertex_in_plus(x1, j), b2 = x.vertex_in_plus(x2, j);
        bool b3 = x.vertex_in_plus(x3, j), b4 = x.vertex_in_plus(x4, j);
        if (b1 == b4 && b2 == b3 && b1 != b2) ++out.side_h;
        if (b1 == b2 && b3 == b4 && b1 != b3) ++out.side_v;
    }

    auto [m1, m2, m3, m4] = out.m;
    if (x.distance_l1(m1, m2) != out.side_h || x.distance_l1(m3, m4) != out.side_h ||
        x.distance_l1(m2, m3) != out.side_v || x.distance_l1(m1, m4) != out.side_v ||
        x.distance_l1(m1, m3) != out.side_h + out.side_v ||
        x.distance_l1(m2, m4) != out.side_h + out.side_v)
        throw error("quadruple_grid: corner distances disagree with separation counts");

    out.rect = rectangle_from_corners(x, m1, m2, m3, m4);
    if (!out.rect.is_isometric(x)) throw error("quadruple_grid: embedding is not isometric");

    for (int i = 0; i < 4; ++i) {
        int xi = xs[i], xi1 = xs[(i + 1) % 4];
        int mi = out.m[i], mi1 = out.m[(i + 1) % 4];
        Bitset big = x.interval_bitset(xi, xi1);
        Bitset part = x.interval_bitset(xi, mi) | x.interval_bitset(mi, mi1) |
                      x.interval_bitset(mi1, xi1);
        if (!part.is_subset_of(big))
            throw error("quadruple_grid: interval containment fails");
    }
    return out;
}

}  // namespace cubex
