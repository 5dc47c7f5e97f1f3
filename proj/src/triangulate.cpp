#include "geocover/triangulate.hpp"

#include <map>
#include <utility>

namespace geocover {

namespace {

bool point_in_cw_triangle(Point2 a, Point2 b, Point2 c, Point2 p) {
    return orient(a, b, p) <= 0 && orient(b, c, p) <= 0 && orient(c, a, p) <= 0;
}

} // namespace

Triangulation triangulate(const SimplePolygon& poly) {
    int n = poly.size();
    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;

    Triangulation out;
    out.triangles.reserve(n - 2);

    auto is_ear = [&](int pos) {
        int m = static_cast<int>(ring.size());
        int ia = ring[(pos + m - 1) % m], ib = ring[pos], ic = ring[(pos + 1) % m];
        Point2 a = poly.vertex(ia), b = poly.vertex(ib), c = poly.vertex(ic);
        if (orient(a, b, c) >= 0) return false;  // reflex or degenerate in cw polygon
        for (int j = 0; j < m; ++j) {
            int iv = ring[j];
            if (iv == ia || iv == ib || iv == ic) continue;
            if (point_in_cw_triangle(a, b, c, poly.vertex(iv))) return false;
        }
        return true;
    };

    while (ring.size() > 3) {
        int m = static_cast<int>(ring.size());
        int clipped = -1;
        for (int pos = 0; pos < m; ++pos) {
            if (is_ear(pos)) {
                clipped = pos;
                break;
            }
        }
        // A simple polygon always has an ear; if predicates disagree take the
        // first convex corner rather than loop forever.
        if (clipped < 0) {
            for (int pos = 0; pos < m && clipped < 0; ++pos) {
                int ia = ring[(pos + m - 1) % m], ib = ring[pos], ic = ring[(pos + 1) % m];
                if (orient(poly.vertex(ia), poly.vertex(ib), poly.vertex(ic)) < 0)
                    clipped = pos;
            }
            if (clipped < 0) clipped = 0;
        }
        int m2 = static_cast<int>(ring.size());
        int ia = ring[(clipped + m2 - 1) % m2], ib = ring[clipped], ic = ring[(clipped + 1) % m2];
        out.triangles.push_back({ia, ib, ic});
        ring.erase(ring.begin() + clipped);
    }
    out.triangles.push_back({ring[0], ring[1], ring[2]});

    // Dual adjacency via shared (sorted) vertex pairs.
    out.dual_adjacency.assign(out.triangles.size(), {});
    std::map<std::pair<int, int>, int> edge_owner;
    for (int ti = 0; ti < static_cast<int>(out.triangles.size()); ++ti) {
        const auto& tri = out.triangles[ti];
        for (int k = 0; k < 3; ++k) {
            int u = tri[k], v = tri[(k + 1) % 3];
            auto key = std::minmax(u, v);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner[key] = ti;
            } else {
                out.dual_adjacency[ti].push_back(it->second);
                out.dual_adjacency[it->second].push_back(ti);
            }
        }
    }
    return out;
}

int Triangulation::locate(const SimplePolygon& poly, Point2 p) const {
    for (int ti = 0; ti < static_cast<int>(triangles.size()); ++ti) {
        const auto& t = triangles[ti];
        if (point_in_cw_triangle(poly.vertex(t[0]), poly.vertex(t[1]), poly.vertex(t[2]), p))
            return ti;
    }
    // Numerical fallback: nearest triangle by distance to its edges.
    int best = -1;
    double best_d = 1e-9;
    for (int ti = 0; ti < static_cast<int>(triangles.size()); ++ti) {
        const auto& t = triangles[ti];
        for (int k = 0; k < 3; ++k) {
            double d = point_segment_dist(p, poly.vertex(t[k]), poly.vertex(t[(k + 1) % 3]));
            if (d < best_d) {
                best_d = d;
                best = ti;
            }
        }
    }
    return best;
}

} // namespace geocover
