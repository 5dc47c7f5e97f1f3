#include "geocover/disk.hpp"

#include <algorithm>
#include <cmath>

#include "geocover/envelope.hpp"
#include "geocover/errors.hpp"

namespace geocover {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

/// Angles (on the circle around a, radius r) of intersections with segment pq.
void circle_segment_angles(Point2 a, double r, Point2 p, Point2 q, std::vector<double>& out) {
    Point2 d = q - p;
    Point2 f = p - a;
    double qa = dot(d, d);
    double qb = 2.0 * dot(f, d);
    double qc = dot(f, f) - r * r;
    if (qa == 0.0) return;
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return;
    double sq = std::sqrt(disc);
    for (double t : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) {
        if (t < -1e-12 || t > 1.0 + 1e-12) continue;
        Point2 x = p + t * d;
        out.push_back(wrap_angle(std::atan2(x.y - a.y, x.x - a.x)));
    }
}

/// Angles on circle (a, ra) of its intersections with circle (b, rb).
void circle_circle_angles(Point2 a, double ra, Point2 b, double rb, std::vector<double>& out) {
    double d = dist(a, b);
    if (d < 1e-15 || d > ra + rb || d < std::abs(ra - rb)) return;
    double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
    double h2 = ra * ra - x * x;
    if (h2 < 0.0) h2 = 0.0;
    double h = std::sqrt(h2);
    double base = std::atan2(b.y - a.y, b.x - a.x);
    double off = std::atan2(h, x);
    out.push_back(wrap_angle(base + off));
    out.push_back(wrap_angle(base - off));
}

/// Intersection points (not angles) of two circles.
std::vector<Point2> circle_circle_points(Point2 a, double ra, Point2 b, double rb) {
    std::vector<Point2> out;
    double d = dist(a, b);
    if (d < 1e-15 || d > ra + rb + 1e-12 || d < std::abs(ra - rb) - 1e-12) return out;
    double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
    double h2 = ra * ra - x * x;
    if (h2 < 0.0) h2 = 0.0;
    double h = std::sqrt(h2);
    Point2 u = (b - a) / d;
    Point2 n{-u.y, u.x};
    out.push_back(a + x * u + h * n);
    if (h > 0.0) out.push_back(a + x * u - h * n);
    return out;
}

bool angle_in_arc(double ang, const DiskArc& arc) {
    // Arc ranges may be stored shifted by one period in either direction.
    double a = wrap_angle(ang);
    for (double s : {-kTwoPi, 0.0, kTwoPi})
        if (a + s + 1e-12 >= arc.ang0 && a + s <= arc.ang1 + 1e-12) return true;
    return false;
}

struct LoopEnd {
    Point2 start;
    Point2 end;
};

LoopEnd piece_ends(const SimplePolygon& poly, const DiskBoundaryPiece& pc) {
    if (pc.kind == DiskBoundaryPiece::Kind::Arc)
        return {pc.arc.point_at(pc.arc.ang0), pc.arc.point_at(pc.arc.ang1)};
    return {pc.seg0.position(poly), pc.seg1.position(poly)};
}

} // namespace

bool disk_contains(const PathEngine& engine, Point2 center, Point2 p) {
    return engine.distance(center, p) <= 1.0 + 1e-12;
}

GeodesicDisk disk_boundary(const PathEngine& engine, Point2 center) {
    const SimplePolygon& poly = engine.polygon();
    if (!poly.contains(center)) throw PointOutsidePolygon("disk_boundary: center outside polygon");

    GeodesicDisk disk;
    disk.center = center;

    // Candidate anchors: the center plus every vertex strictly inside the
    // unit disk. Arcs around non-anchoring vertices are removed later by the
    // visibility + exact-distance classification.
    struct Anchor {
        Point2 p;
        double r;
    };
    std::vector<Anchor> anchors{{center, 1.0}};
    for (int i = 0; i < poly.size(); ++i) {
        double d = engine.distance(center, poly.vertex(i));
        if (d > 1e-12 && d < 1.0 - 1e-12) anchors.push_back({poly.vertex(i), 1.0 - d});
    }

    std::vector<DiskBoundaryPiece> arc_pieces;
    for (size_t ai = 0; ai < anchors.size(); ++ai) {
        const Anchor& an = anchors[ai];
        std::vector<double> angles;
        for (int e = 0; e < poly.size(); ++e)
            circle_segment_angles(an.p, an.r, poly.vertex(e), poly.vertex(e + 1), angles);
        for (size_t bi = 0; bi < anchors.size(); ++bi)
            if (bi != ai)
                circle_circle_angles(an.p, an.r, anchors[bi].p, anchors[bi].r, angles);
        // Visibility of the anchor can flip where the radial ray passes a
        // vertex, and the active anchor switches on the continuation of the
        // incoming geodesic beyond the anchor; cut at both directions.
        for (int i = 0; i < poly.size(); ++i) {
            Point2 v = poly.vertex(i);
            if (v == an.p) continue;
            double ang = std::atan2(v.y - an.p.y, v.x - an.p.x);
            angles.push_back(wrap_angle(ang));
            angles.push_back(wrap_angle(ang + kPi));
        }
        if (!(an.p == center)) {
            GeodesicPath in = engine.shortest_path(center, an.p);
            if (in.points.size() >= 2) {
                Point2 prev = in.points[in.points.size() - 2];
                double ang = std::atan2(an.p.y - prev.y, an.p.x - prev.x);
                angles.push_back(wrap_angle(ang));
                angles.push_back(wrap_angle(ang + kPi));
            }
        }
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end(),
                                 [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                     angles.end());

        auto valid_at = [&](double ang) {
            Point2 p = an.p + an.r * Point2{std::cos(ang), std::sin(ang)};
            if (!poly.contains(p)) return false;
            if (!poly.segment_inside(an.p, p)) return false;
            return std::abs(engine.distance(center, p) - 1.0) <= 1e-9;
        };

        std::vector<DiskArc> arcs;
        if (angles.empty()) {
            if (valid_at(0.0) && valid_at(kPi / 2) && valid_at(kPi) && valid_at(3 * kPi / 2))
                arcs.push_back({an.p, an.r, 0.0, kTwoPi});
        } else {
            size_t m = angles.size();
            for (size_t i = 0; i < m; ++i) {
                double a0 = angles[i];
                double a1 = (i + 1 < m) ? angles[i + 1] : angles[0] + kTwoPi;
                if (a1 - a0 < 1e-12) continue;
                if (valid_at(0.5 * (a0 + a1))) arcs.push_back({an.p, an.r, a0, a1});
            }
            // Merge angularly adjacent valid sub-arcs (including the wrap).
            std::vector<DiskArc> merged;
            for (const auto& arc : arcs) {
                if (!merged.empty() && std::abs(merged.back().ang1 - arc.ang0) < 1e-12) {
                    merged.back().ang1 = arc.ang1;
                } else {
                    merged.push_back(arc);
                }
            }
            if (merged.size() > 1 &&
                std::abs(wrap_angle(merged.back().ang1) - merged.front().ang0) < 1e-12) {
                merged.front().ang0 = merged.back().ang0 - kTwoPi;
                merged.pop_back();
            }
            arcs = std::move(merged);
        }
        for (const auto& arc : arcs) {
            DiskBoundaryPiece pc;
            pc.kind = DiskBoundaryPiece::Kind::Arc;
            pc.arc = arc;
            arc_pieces.push_back(pc);
        }
    }

    // Absorbed boundary portions: sub-intervals of dP with d(center, .) <= 1.
    struct SpanS {
        double s0, s1;
    };
    std::vector<SpanS> spans;
    for (int e = 0; e < poly.size(); ++e) {
        Point2 a = poly.vertex(e), b = poly.vertex(e + 1);
        if (point_segment_dist(center, a, b) > 1.0 + 1e-12) continue;
        DistanceProfile prof = engine.distance_profile(center, a, b);
        std::vector<double> cuts{0.0, 1.0};
        for (const auto& piece : prof.pieces)
            for (double t : solve_distance_equals(piece.anchor, piece.base, prof.seg_a, prof.seg_b,
                                                  1.0, piece.t0, piece.t1))
                cuts.push_back(t);
        std::sort(cuts.begin(), cuts.end());
        double s_base = poly.vertex_arclength(e);
        double elen = poly.edge_length(e);
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            double t0 = cuts[i], t1 = cuts[i + 1];
            if (t1 - t0 < 1e-12) continue;
            // Strict interior test: a tangent edge (distance exactly 1 at one
            // point) is not an absorbed portion.
            if (prof.eval(0.5 * (t0 + t1)) < 1.0 - 1e-12)
                spans.push_back({s_base + t0 * elen, s_base + t1 * elen});
        }
    }
    std::sort(spans.begin(), spans.end(), [](const SpanS& x, const SpanS& y) { return x.s0 < y.s0; });
    std::vector<SpanS> merged_spans;
    for (const auto& sp : spans) {
        if (!merged_spans.empty() && sp.s0 - merged_spans.back().s1 < 1e-9) {
            merged_spans.back().s1 = std::max(merged_spans.back().s1, sp.s1);
        } else {
            merged_spans.push_back(sp);
        }
    }
    // Wrap-around merge at s = 0.
    if (merged_spans.size() > 1 && merged_spans.front().s0 < 1e-9 &&
        poly.perimeter() - merged_spans.back().s1 < 1e-9) {
        merged_spans.front().s0 = merged_spans.back().s0 - poly.perimeter();
        merged_spans.pop_back();
    }

    std::vector<DiskBoundaryPiece> pieces = std::move(arc_pieces);
    for (const auto& sp : merged_spans) {
        DiskBoundaryPiece pc;
        pc.kind = DiskBoundaryPiece::Kind::Boundary;
        double L = poly.perimeter();
        double s0 = sp.s0 < 0.0 ? sp.s0 + L : sp.s0;
        pc.seg0 = poly.point_at_arclength(s0);
        pc.seg1 = poly.point_at_arclength(std::fmod(sp.s1, L));
        // Keep the true span length recoverable even across the wrap.
        pc.seg0.s = sp.s0;
        pc.seg1.s = sp.s1;
        pieces.push_back(pc);
    }

    // Stitch pieces into one closed loop by endpoint matching.
    if (pieces.size() == 1 && pieces[0].kind == DiskBoundaryPiece::Kind::Arc &&
        pieces[0].arc.ang1 - pieces[0].arc.ang0 >= kTwoPi - 1e-9) {
        disk.pieces = std::move(pieces);
        disk.closed = true;
        return disk;
    }
    std::vector<bool> used(pieces.size(), false);
    std::vector<DiskBoundaryPiece> ordered;
    if (!pieces.empty()) {
        ordered.push_back(pieces[0]);
        used[0] = true;
        LoopEnd cur = piece_ends(poly, ordered.back());
        Point2 tail = ordered.back().reversed ? cur.start : cur.end;
        Point2 loop_start = cur.start;
        const double tol = 1e-6;
        for (size_t step = 1; step < pieces.size(); ++step) {
            int best = -1;
            bool rev = false;
            double best_d = tol;
            for (size_t i = 0; i < pieces.size(); ++i) {
                if (used[i]) continue;
                LoopEnd e = piece_ends(poly, pieces[i]);
                if (dist(e.start, tail) < best_d) {
                    best = static_cast<int>(i);
                    rev = false;
                    best_d = dist(e.start, tail);
                }
                if (dist(e.end, tail) < best_d) {
                    best = static_cast<int>(i);
                    rev = true;
                    best_d = dist(e.end, tail);
                }
            }
            if (best < 0) break;
            pieces[best].reversed = rev;
            ordered.push_back(pieces[best]);
            used[best] = true;
            LoopEnd e = piece_ends(poly, pieces[best]);
            tail = rev ? e.start : e.end;
        }
        disk.closed = ordered.size() == pieces.size() && dist(tail, loop_start) < 1e-6;
    }
    disk.pieces = std::move(ordered);
    return disk;
}

std::vector<Point2> disk_polyline(const SimplePolygon& poly, const GeodesicDisk& disk,
                                  double sagitta) {
    std::vector<Point2> out;
    auto push = [&](Point2 p) {
        if (out.empty() || dist(out.back(), p) > 1e-12) out.push_back(p);
    };
    for (const auto& pc : disk.pieces) {
        if (pc.kind == DiskBoundaryPiece::Kind::Arc) {
            const DiskArc& arc = pc.arc;
            double span = arc.ang1 - arc.ang0;
            double max_step = 2.0 * std::acos(std::max(0.0, 1.0 - sagitta / std::max(arc.r, 1e-9)));
            int steps = std::max(2, static_cast<int>(std::ceil(span / std::max(max_step, 1e-3))));
            for (int k = 0; k <= steps; ++k) {
                double f = static_cast<double>(k) / steps;
                double ang = pc.reversed ? arc.ang1 - f * span : arc.ang0 + f * span;
                push(arc.point_at(ang));
            }
        } else {
            double s0 = pc.seg0.s, s1 = pc.seg1.s;
            if (pc.reversed) std::swap(s0, s1);
            double dir = s1 >= s0 ? 1.0 : -1.0;
            push(poly.point_at_arclength(std::fmod(s0 + poly.perimeter(), poly.perimeter()))
                     .position(poly));
            // Include every polygon vertex interior to the span.
            {
                double lo = std::min(s0, s1), hi = std::max(s0, s1);
                std::vector<double> vs;
                for (int i = 0; i < poly.size(); ++i) {
                    for (double shift : {-poly.perimeter(), 0.0, poly.perimeter()}) {
                        double sv = poly.vertex_arclength(i) + shift;
                        if (sv > lo + 1e-12 && sv < hi - 1e-12) vs.push_back(sv);
                    }
                }
                std::sort(vs.begin(), vs.end());
                if (dir < 0) std::reverse(vs.begin(), vs.end());
                for (double sv : vs)
                    push(poly.point_at_arclength(std::fmod(sv + poly.perimeter(), poly.perimeter()))
                             .position(poly));
            }
            push(poly.point_at_arclength(std::fmod(s1 + poly.perimeter(), poly.perimeter()))
                     .position(poly));
        }
    }
    if (out.size() > 1 && dist(out.front(), out.back()) < 1e-9) out.pop_back();
    return out;
}

bool region_contains(const PathEngine& engine, const IntersectionRegion& region, Point2 p) {
    for (const Point2& c : region.centers)
        if (engine.distance(c, p) > 1.0 + 1e-9) return false;
    return true;
}

std::vector<IntersectionPoint> disk_disk_intersections(const PathEngine& engine,
                                                       const IntersectionRegion& region) {
    std::vector<IntersectionPoint> out;
    size_t m = region.centers.size();
    if (m < 2) return out;

    std::vector<GeodesicDisk> disks;
    for (const Point2& c : region.centers) disks.push_back(disk_boundary(engine, c));

    auto try_point = [&](Point2 p, Point2 ca, Point2 cb) {
        if (!engine.polygon().contains(p)) return;
        if (std::abs(engine.distance(ca, p) - 1.0) > 1e-9) return;
        if (std::abs(engine.distance(cb, p) - 1.0) > 1e-9) return;
        if (!region_contains(engine, region, p)) return;
        for (const auto& q : out)
            if (dist(q.p, p) < 1e-9) return;
        out.push_back({p, ca, cb});
    };

    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            for (const auto& pi : disks[i].pieces) {
                if (pi.kind != DiskBoundaryPiece::Kind::Arc) continue;
                for (const auto& pj : disks[j].pieces) {
                    if (pj.kind != DiskBoundaryPiece::Kind::Arc) continue;
                    for (Point2 p : circle_circle_points(pi.arc.anchor, pi.arc.r, pj.arc.anchor,
                                                         pj.arc.r)) {
                        double ai = std::atan2(p.y - pi.arc.anchor.y, p.x - pi.arc.anchor.x);
                        double aj = std::atan2(p.y - pj.arc.anchor.y, p.x - pj.arc.anchor.x);
                        if (!angle_in_arc(ai, pi.arc) || !angle_in_arc(aj, pj.arc)) continue;
                        try_point(p, region.centers[i], region.centers[j]);
                    }
                }
            }
            // Absorbed-piece endpoints sit at distance exactly 1; they can be
            // intersection points when the other circle passes through them.
            for (size_t a = 0; a < 2; ++a) {
                const auto& da = a == 0 ? disks[i] : disks[j];
                Point2 ca = a == 0 ? region.centers[i] : region.centers[j];
                Point2 cb = a == 0 ? region.centers[j] : region.centers[i];
                for (const auto& pc : da.pieces) {
                    if (pc.kind != DiskBoundaryPiece::Kind::Boundary) continue;
                    const SimplePolygon& poly = engine.polygon();
                    try_point(pc.seg0.position(poly), ca, cb);
                    try_point(pc.seg1.position(poly), ca, cb);
                }
            }
        }
    return out;
}

} // namespace geocover
