#include "geocover/path_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>

#include "geocover/errors.hpp"

namespace geocover {

namespace {

double triarea2(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

bool veq(Point2 a, Point2 b) {
    return a.x == b.x && a.y == b.y;
}

double hash_double(double v) {
    return v == 0.0 ? 0.0 : v;  // normalize -0.0
}

} // namespace

size_t PathEngine::PairKeyHash::operator()(const PairKey& k) const {
    auto h = [](double v) { return std::hash<double>{}(v); };
    size_t s = h(k.ax);
    s = s * 1000003u ^ h(k.ay);
    s = s * 1000003u ^ h(k.bx);
    s = s * 1000003u ^ h(k.by);
    return s;
}

PathEngine::PathEngine(SimplePolygon poly)
    : poly_(std::move(poly)), tri_(triangulate(poly_)) {
    for (int ti = 0; ti < static_cast<int>(tri_.triangles.size()); ++ti)
        for (int v : tri_.triangles[ti])
            vertex_triangle_.emplace(static_cast<long long>(v), ti);
}

int PathEngine::locate_or_throw(Point2 p) const {
    for (int i = 0; i < poly_.size(); ++i)
        if (veq(poly_.vertex(i), p)) {
            auto it = vertex_triangle_.find(i);
            if (it != vertex_triangle_.end()) return it->second;
        }
    int t = tri_.locate(poly_, p);
    if (t < 0) throw PointOutsidePolygon("point outside polygon");
    return t;
}

GeodesicPath PathEngine::shortest_path(Point2 u, Point2 v) const {
    GeodesicPath out;
    if (veq(u, v)) {
        locate_or_throw(u);
        out.points = {u};
        out.length = 0.0;
        return out;
    }
    int ts = locate_or_throw(u);
    int tt = locate_or_throw(v);

    // Triangle sleeve via BFS in the dual tree.
    std::vector<int> prev(tri_.triangles.size(), -2);
    std::deque<int> queue{ts};
    prev[ts] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == tt) break;
        for (int nb : tri_.dual_adjacency[cur])
            if (prev[nb] == -2) {
                prev[nb] = cur;
                queue.push_back(nb);
            }
    }
    std::vector<int> sleeve;
    for (int cur = tt; cur != -1; cur = prev[cur]) sleeve.push_back(cur);
    std::reverse(sleeve.begin(), sleeve.end());

    // Portals: shared edges between consecutive sleeve triangles. Triangles
    // are stored clockwise, so for the directed shared edge (p, q) in the
    // current triangle's stored order, p is the left endpoint of the portal.
    std::vector<std::pair<Point2, Point2>> portals;  // (left, right)
    for (size_t i = 0; i + 1 < sleeve.size(); ++i) {
        const auto& ta = tri_.triangles[sleeve[i]];
        const auto& tb = tri_.triangles[sleeve[i + 1]];
        int p = -1, q = -1;
        for (int k = 0; k < 3; ++k) {
            int a0 = ta[k], a1 = ta[(k + 1) % 3];
            for (int l = 0; l < 3; ++l) {
                int b0 = tb[l], b1 = tb[(l + 1) % 3];
                if ((a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0)) {
                    p = a0;
                    q = a1;
                }
            }
        }
        portals.emplace_back(poly_.vertex(p), poly_.vertex(q));
    }
    portals.emplace_back(v, v);

    // Funnel (string pulling).
    std::vector<Point2> pts;
    Point2 apex = u, left = u, right = u;
    size_t apex_i = 0, left_i = 0, right_i = 0;
    pts.push_back(u);
    for (size_t i = 0; i < portals.size(); ++i) {
        Point2 pl = portals[i].first, pr = portals[i].second;
        // Tighten the right side.
        if (triarea2(apex, right, pr) >= 0) {
            if (veq(apex, right) || triarea2(apex, left, pr) < 0) {
                right = pr;
                right_i = i;
            } else {
                if (!veq(pts.back(), left)) pts.push_back(left);
                apex = left;
                apex_i = left_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
        // Tighten the left side.
        if (triarea2(apex, left, pl) <= 0) {
            if (veq(apex, left) || triarea2(apex, right, pl) > 0) {
                left = pl;
                left_i = i;
            } else {
                if (!veq(pts.back(), right)) pts.push_back(right);
                apex = right;
                apex_i = right_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
    }
    if (!veq(pts.back(), v)) pts.push_back(v);

    // A query point lying exactly on a diagonal (or collinear with a reflex
    // vertex) can misfold the funnel: reversal spurs or detours through
    // vertices whose neighbors actually see each other. Repair by dropping
    // collinear spurs, then shortcutting mutually visible neighbors.
    for (size_t i = 1; i + 1 < pts.size();) {
        Point2 a = pts[i - 1], p = pts[i], b = pts[i + 1];
        double scale = dist(a, p) * dist(p, b);
        if (std::abs(triarea2(a, p, b)) <= 1e-12 * scale && dot(p - a, b - p) < 0.0) {
            pts.erase(pts.begin() + i);
            if (i > 1) --i;
        } else {
            ++i;
        }
    }
    for (bool changed = true; changed && pts.size() > 2;) {
        changed = false;
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            // Only shortcut when it strictly shortens; a collinear graze of a
            // reflex corner stays in the polyline.
            double via = dist(pts[i - 1], pts[i]) + dist(pts[i], pts[i + 1]);
            double direct = dist(pts[i - 1], pts[i + 1]);
            if (via - direct <= 1e-12 * (1.0 + via)) continue;
            if (poly_.segment_inside(pts[i - 1], pts[i + 1])) {
                pts.erase(pts.begin() + i);
                changed = true;
                break;
            }
        }
    }

    out.points = std::move(pts);
    out.length = 0.0;
    for (size_t i = 0; i + 1 < out.points.size(); ++i)
        out.length += dist(out.points[i], out.points[i + 1]);
    return out;
}

double PathEngine::distance(Point2 u, Point2 v) const {
    PairKey key;
    if (u.x < v.x || (u.x == v.x && u.y <= v.y)) {
        key = {hash_double(u.x), hash_double(u.y), hash_double(v.x), hash_double(v.y)};
    } else {
        key = {hash_double(v.x), hash_double(v.y), hash_double(u.x), hash_double(u.y)};
    }
    auto it = dist_cache_.find(key);
    if (it != dist_cache_.end()) return it->second;
    double d = shortest_path(u, v).length;
    dist_cache_.emplace(key, d);
    return d;
}

ShortestPathTree PathEngine::shortest_path_tree(Point2 source) const {
    ShortestPathTree tree;
    tree.source = source;
    int n = poly_.size();
    tree.parent.resize(n);
    tree.dist.resize(n);
    for (int i = 0; i < n; ++i) {
        GeodesicPath path = shortest_path(source, poly_.vertex(i));
        tree.dist[i] = path.length;
        if (path.points.size() < 2) {
            tree.parent[i] = -1;
            continue;
        }
        Point2 pred = path.points[path.points.size() - 2];
        int pi = -1;
        for (int j = 0; j < n; ++j)
            if (veq(poly_.vertex(j), pred)) {
                pi = j;
                break;
            }
        tree.parent[i] = pi;  // -1 when the predecessor is the source itself
    }
    return tree;
}

Point2 PathEngine::point_along_path(const GeodesicPath& path, double length_from_start) const {
    double remaining = std::max(0.0, length_from_start);
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        double seg = dist(path.points[i], path.points[i + 1]);
        if (remaining <= seg) {
            if (seg == 0.0) return path.points[i];
            return lerp(path.points[i], path.points[i + 1], remaining / seg);
        }
        remaining -= seg;
    }
    return path.points.back();
}

double DistanceProfile::eval(double t) const {
    const ProfilePiece& p = piece_at(t);
    return p.base + dist(p.anchor, at(t));
}

const ProfilePiece& DistanceProfile::piece_at(double t) const {
    for (const auto& p : pieces)
        if (t <= p.t1 || &p == &pieces.back()) return p;
    return pieces.back();
}

DistanceProfile PathEngine::distance_profile(Point2 source, Point2 seg_a, Point2 seg_b) const {
    if (!poly_.segment_inside(seg_a, seg_b))
        throw SegmentOutsidePolygon("segment not inside polygon");
    DistanceProfile prof;
    prof.seg_a = seg_a;
    prof.seg_b = seg_b;

    struct EndInfo {
        Point2 anchor;
        double base;
        double value;
    };
    auto info_at = [&](double t) {
        Point2 p = prof.at(t);
        GeodesicPath path = shortest_path(source, p);
        EndInfo e;
        e.value = path.length;
        if (path.points.size() < 2) {
            e.anchor = source;
            e.base = 0.0;
        } else {
            e.anchor = path.points[path.points.size() - 2];
            e.base = path.length - dist(e.anchor, p);
        }
        return e;
    };

    std::function<void(double, const EndInfo&, double, const EndInfo&)> build =
        [&](double t0, const EndInfo& i0, double t1, const EndInfo& i1) {
            double scale = 1.0 + std::abs(i0.value) + std::abs(i1.value);
            bool same_anchor = dist(i0.anchor, i1.anchor) < 1e-12 &&
                               std::abs(i0.base - i1.base) < 1e-9;
            double tm = 0.5 * (t0 + t1);
            EndInfo im = info_at(tm);
            if (same_anchor) {
                double predicted = i0.base + dist(i0.anchor, prof.at(tm));
                if (std::abs(predicted - im.value) < 1e-11 * scale) {
                    prof.pieces.push_back({t0, t1, i0.anchor, i0.base});
                    return;
                }
            }
            if (t1 - t0 < 1e-12) {
                // Breakpoint localized below tolerance; close with two pieces.
                prof.pieces.push_back({t0, tm, i0.anchor, i0.base});
                prof.pieces.push_back({tm, t1, i1.anchor, i1.base});
                return;
            }
            build(t0, i0, tm, im);
            build(tm, im, t1, i1);
        };

    EndInfo i0 = info_at(0.0), i1 = info_at(1.0);
    if (veq(seg_a, seg_b)) {
        prof.pieces.push_back({0.0, 1.0, i0.anchor, i0.base});
        return prof;
    }
    build(0.0, i0, 1.0, i1);

    // Merge adjacent pieces that share anchor and base.
    std::vector<ProfilePiece> merged;
    for (const auto& p : prof.pieces) {
        if (!merged.empty() && dist(merged.back().anchor, p.anchor) < 1e-12 &&
            std::abs(merged.back().base - p.base) < 1e-12) {
            merged.back().t1 = p.t1;
        } else {
            merged.push_back(p);
        }
    }
    prof.pieces = std::move(merged);
    return prof;
}

} // namespace geocover
