#include "geocover/corridor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace geocover {

namespace {

Point2 perp(Point2 v) { return {-v.y, v.x}; }

struct EdgeFrame {
    Point2 a;  // start vertex
    Point2 t;  // unit direction (clockwise)
    Point2 n;  // inward normal
    double len;
};

EdgeFrame edge_frame(const SimplePolygon& poly, int e) {
    Point2 a = poly.vertex(e), b = poly.vertex(e + 1);
    double len = dist(a, b);
    Point2 t = (b - a) / len;
    return {a, t, {t.y, -t.x}, len};  // interior lies right of a clockwise edge
}

struct Bbox {
    double xlo, xhi, ylo, yhi;
};

Bbox bounding_box(const SimplePolygon& poly) {
    Bbox b{1e300, -1e300, 1e300, -1e300};
    for (const Point2& p : poly.vertices()) {
        b.xlo = std::min(b.xlo, p.x);
        b.xhi = std::max(b.xhi, p.x);
        b.ylo = std::min(b.ylo, p.y);
        b.yhi = std::max(b.yhi, p.y);
    }
    return b;
}

/// Parameter interval of p(s) = base + s*dir inside the box, or empty (lo > hi).
std::pair<double, double> clip_line_to_box(Point2 base, Point2 dir, const Bbox& box) {
    double lo = -1e300, hi = 1e300;
    auto slab = [&](double b0, double d, double wlo, double whi) {
        if (std::abs(d) < 1e-15) {
            if (b0 < wlo || b0 > whi) lo = 1.0, hi = 0.0;
            return;
        }
        double s0 = (wlo - b0) / d, s1 = (whi - b0) / d;
        if (s0 > s1) std::swap(s0, s1);
        lo = std::max(lo, s0);
        hi = std::min(hi, s1);
    };
    slab(base.x, dir.x, box.xlo, box.xhi);
    slab(base.y, dir.y, box.ylo, box.yhi);
    return {lo, hi};
}

double parabola_height(double x, double xv, double yv) {
    return ((x - xv) * (x - xv) + yv * yv) / (2.0 * yv);
}

double parabola_arclength(double xa, double xb, double xv, double yv) {
    // Simpson on |p'(x)| = sqrt(1 + ((x - xv)/yv)^2).
    auto f = [&](double x) {
        double d = (x - xv) / yv;
        return std::sqrt(1.0 + d * d);
    };
    int panels = 256;
    double h = (xb - xa) / panels, sum = f(xa) + f(xb);
    for (int i = 1; i < panels; ++i) sum += f(xa + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

double feature_distance(const SimplePolygon& poly, const MedialFeature& f, Point2 p) {
    if (f.kind == MedialFeature::Kind::ReflexVertex) return dist(p, poly.vertex(f.index));
    return point_segment_dist(p, poly.vertex(f.index), poly.vertex(f.index + 1));
}

Point2 MedialEdge::point_at(double u) const {
    if (geometry == Geometry::Segment) return lerp(p0, p1, u);
    double x = x0 + (x1 - x0) * u;
    double xv = dot(dir_t, focus - dir_a), yv = dot(dir_n, focus - dir_a);
    return dir_a + x * dir_t + parabola_height(x, xv, yv) * dir_n;
}

MedialAxis medial_axis(const SimplePolygon& poly) {
    int n = poly.size();
    std::vector<MedialFeature> features;
    for (int e = 0; e < n; ++e) features.push_back({MedialFeature::Kind::Edge, e});
    for (int v = 0; v < n; ++v)
        if (poly.reflex(v)) features.push_back({MedialFeature::Kind::ReflexVertex, v});

    Bbox box = bounding_box(poly);
    double diag = std::hypot(box.xhi - box.xlo, box.yhi - box.ylo);
    double eq_tol = 1e-9 * (1.0 + diag);
    Bbox fat{box.xlo - 1.0, box.xhi + 1.0, box.ylo - 1.0, box.yhi + 1.0};

    MedialAxis axis;

    // Predicate for a candidate bisector point of features (i, j): inside the
    // polygon, genuinely equidistant from both, and no other feature closer.
    auto valid = [&](Point2 p, size_t i, size_t j) {
        if (!poly.contains(p)) return false;
        double d1 = feature_distance(poly, features[i], p);
        double d2 = feature_distance(poly, features[j], p);
        if (std::abs(d1 - d2) > eq_tol + 1e-12 * (d1 + d2)) return false;
        double d = std::min(d1, d2);
        for (size_t k = 0; k < features.size(); ++k) {
            if (k == i || k == j) continue;
            if (feature_distance(poly, features[k], p) < d - eq_tol) return false;
        }
        return true;
    };

    // Scans curve(s) on [lo, hi], emits every maximal valid run as an edge.
    auto scan = [&](size_t i, size_t j, double lo, double hi,
                    const std::function<Point2(double)>& curve,
                    const std::function<void(double, double)>& emit) {
        if (!(hi > lo)) return;
        const int N = 2048;
        double step = (hi - lo) / N;
        int run_start = -1;
        auto ok = [&](double s) { return valid(curve(s), i, j); };
        auto refine = [&](double s_bad, double s_good) {
            for (int it = 0; it < 50; ++it) {
                double m = 0.5 * (s_bad + s_good);
                (ok(m) ? s_good : s_bad) = m;
            }
            return s_good;
        };
        for (int k = 0; k <= N; ++k) {
            bool v = ok(lo + k * step);
            if (v && run_start < 0) run_start = k;
            if ((!v || k == N) && run_start >= 0) {
                int run_end = v ? k : k - 1;
                double s0 = lo + run_start * step, s1 = lo + run_end * step;
                if (run_start > 0) s0 = refine(s0 - step, s0);
                if (!v) s1 = refine(s1 + step, s1);
                if (s1 - s0 > 1e-7 * (1.0 + diag)) emit(s0, s1);
                run_start = -1;
            }
        }
    };

    for (size_t i = 0; i < features.size(); ++i) {
        for (size_t j = i + 1; j < features.size(); ++j) {
            const MedialFeature& fi = features[i];
            const MedialFeature& fj = features[j];
            bool vi = fi.kind == MedialFeature::Kind::ReflexVertex;
            bool vj = fj.kind == MedialFeature::Kind::ReflexVertex;

            if (!vi && !vj) {
                // Edge-edge: locus of equal signed distance to the two
                // supporting lines (measured along the inward normals).
                EdgeFrame e1 = edge_frame(poly, fi.index), e2 = edge_frame(poly, fj.index);
                Point2 dn = e1.n - e2.n;
                double dn2 = dot(dn, dn);
                if (dn2 < 1e-18) continue;  // same inward normal: no interior bisector
                double m = dot(e1.n, e1.a) - dot(e2.n, e2.a);
                Point2 base = (m / dn2) * dn;
                Point2 dir = perp(dn);
                dir = dir / std::sqrt(dot(dir, dir));
                auto [lo, hi] = clip_line_to_box(base, dir, fat);
                scan(i, j, lo, hi, [&](double s) { return base + s * dir; },
                     [&](double s0, double s1) {
                         MedialEdge me;
                         me.geometry = MedialEdge::Geometry::Segment;
                         me.f1 = fi;
                         me.f2 = fj;
                         me.p0 = base + s0 * dir;
                         me.p1 = base + s1 * dir;
                         me.length = dist(me.p0, me.p1);
                         axis.edges.push_back(me);
                     });
            } else if (vi != vj) {
                // Vertex-edge: parabola, focus = reflex vertex, directrix =
                // edge line. Degenerate (focus on the line) pairs are the
                // vertex's own edges: no axis edge there.
                const MedialFeature& fv = vi ? fi : fj;
                const MedialFeature& fe = vi ? fj : fi;
                EdgeFrame e = edge_frame(poly, fe.index);
                Point2 v = poly.vertex(fv.index);
                double xv = dot(e.t, v - e.a), yv = dot(e.n, v - e.a);
                if (yv < 1e-9 * (1.0 + diag)) continue;
                double span = std::sqrt(std::max(0.0, 2.0 * yv * (diag + 1.0)));
                double lo = std::max(xv - span, std::min(0.0, xv) - diag);
                double hi = std::min(xv + span, std::max(e.len, xv) + diag);
                auto curve = [&](double x) {
                    return e.a + x * e.t + parabola_height(x, xv, yv) * e.n;
                };
                scan(i, j, lo, hi, curve, [&](double s0, double s1) {
                    MedialEdge me;
                    me.geometry = MedialEdge::Geometry::Parabola;
                    me.f1 = fv;
                    me.f2 = fe;
                    me.dir_a = e.a;
                    me.dir_t = e.t;
                    me.dir_n = e.n;
                    me.focus = v;
                    me.x0 = s0;
                    me.x1 = s1;
                    me.p0 = curve(s0);
                    me.p1 = curve(s1);
                    me.length = parabola_arclength(s0, s1, xv, yv);
                    axis.edges.push_back(me);
                });
            } else {
                // Reflex-reflex: perpendicular bisector segment.
                Point2 v1 = poly.vertex(fi.index), v2 = poly.vertex(fj.index);
                if (dist(v1, v2) < 1e-12) continue;
                Point2 base = 0.5 * (v1 + v2);
                Point2 dir = perp(v2 - v1);
                dir = dir / std::sqrt(dot(dir, dir));
                auto [lo, hi] = clip_line_to_box(base, dir, fat);
                scan(i, j, lo, hi, [&](double s) { return base + s * dir; },
                     [&](double s0, double s1) {
                         MedialEdge me;
                         me.geometry = MedialEdge::Geometry::Segment;
                         me.f1 = fi;
                         me.f2 = fj;
                         me.p0 = base + s0 * dir;
                         me.p1 = base + s1 * dir;
                         me.length = dist(me.p0, me.p1);
                         axis.edges.push_back(me);
                     });
            }
        }
    }

    // Endpoint clustering for the tree structure.
    std::vector<Point2> nodes;
    double node_tol = 1e-5 * (1.0 + diag);
    auto node_id = [&](Point2 p) {
        for (size_t k = 0; k < nodes.size(); ++k)
            if (dist(nodes[k], p) <= node_tol) return static_cast<int>(k);
        nodes.push_back(p);
        return static_cast<int>(nodes.size() - 1);
    };
    for (MedialEdge& me : axis.edges) {
        me.node0 = node_id(me.p0);
        me.node1 = node_id(me.p1);
    }
    axis.node_count = static_cast<int>(nodes.size());
    return axis;
}

namespace {

/// Step-2 centers on the straight sub-segment [lo, hi] of a polygon edge,
/// placed symmetrically so the pattern overhangs both ends.
void step2_on_edge(const SimplePolygon& poly, int edge, double lo, double hi,
                   std::vector<Point2>& out) {
    double len = hi - lo;
    if (len <= 1e-9) return;
    EdgeFrame e = edge_frame(poly, edge);
    int cnt = std::max(1, static_cast<int>(std::ceil(len / 2.0 - 1e-12)));
    double first = lo + (len - 2.0 * (cnt - 1)) / 2.0;
    for (int j = 0; j < cnt; ++j) out.push_back(e.a + (first + 2.0 * j) * e.t);
}

double foot_coord(const EdgeFrame& e, Point2 p) { return dot(e.t, p - e.a); }

} // namespace

std::vector<Corridor> extract_corridors(const SimplePolygon& poly, const MedialAxis& axis,
                                        double c_threshold) {
    std::vector<Corridor> out;
    for (const MedialEdge& me : axis.edges) {
        if (me.length < c_threshold) continue;
        // Reflex-reflex edges govern no boundary sub-segment; the boundary
        // near them is handled as a short portion.
        bool v1 = me.f1.kind == MedialFeature::Kind::ReflexVertex;
        bool v2 = me.f2.kind == MedialFeature::Kind::ReflexVertex;
        if (v1 && v2) continue;

        Corridor c;
        c.axis = me;
        for (const MedialFeature& f : {me.f1, me.f2}) {
            if (f.kind == MedialFeature::Kind::ReflexVertex) {
                c.focus_vertex = f.index;
                continue;
            }
            EdgeFrame e = edge_frame(poly, f.index);
            double a = std::clamp(foot_coord(e, me.p0), 0.0, e.len);
            double b = std::clamp(foot_coord(e, me.p1), 0.0, e.len);
            c.portions.push_back({f.index, std::min(a, b), std::max(a, b)});
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Point2> cover_corridor(const SimplePolygon& poly, const Corridor& corridor) {
    std::vector<Point2> centers;
    const MedialEdge& ax = corridor.axis;

    if (ax.geometry == MedialEdge::Geometry::Parabola) {
        centers.push_back(poly.vertex(corridor.focus_vertex));
        for (const BoundaryPortion& bp : corridor.portions)
            step2_on_edge(poly, bp.edge, bp.lo, bp.hi, centers);
        return centers;
    }

    // Segment corridor: march on the axis while each disk covers > 2 of
    // corridor boundary (chord 2*sqrt(1 - w^2) per side), else step-2 on the
    // boundary remainders. The clearance is linear along the axis, so the
    // mode flips at most once.
    double len = ax.length;
    double s_cov = 0.0;
    bool tail = false;
    auto clearance = [&](double s) {
        return feature_distance(poly, ax.f1, ax.point_at(s / len));
    };
    while (s_cov < len - 1e-9) {
        double w = clearance(s_cov);
        double h = std::sqrt(std::max(0.0, 1.0 - w * w));
        for (int it = 0; it < 3 && h > 0; ++it) {
            w = clearance(std::min(s_cov + h, len));
            h = std::sqrt(std::max(0.0, 1.0 - w * w));
        }
        if (h <= 0.5 + 1e-9) {
            tail = true;
            break;
        }
        double sc = std::min(s_cov + h, len);
        centers.push_back(ax.point_at(sc / len));
        s_cov = sc + h;
    }

    if (tail) {
        Point2 reached = ax.point_at(std::min(s_cov, len) / len);
        for (const BoundaryPortion& bp : corridor.portions) {
            EdgeFrame e = edge_frame(poly, bp.edge);
            double c_begin = std::clamp(foot_coord(e, ax.p0), bp.lo, bp.hi);
            double c_now = std::clamp(foot_coord(e, reached), bp.lo, bp.hi);
            // Feet walked monotonically from c_begin to c_now; the remainder
            // runs from c_now to the far end of the portion.
            double far = (std::abs(c_begin - bp.lo) < std::abs(c_begin - bp.hi)) ? bp.hi : bp.lo;
            step2_on_edge(poly, bp.edge, std::min(c_now, far), std::max(c_now, far), centers);
        }
    }
    return centers;
}

CoverSolution large_perimeter_cover(const PathEngine& engine, double c_threshold) {
    const SimplePolygon& poly = engine.polygon();
    MedialAxis axis = medial_axis(poly);
    std::vector<Corridor> corridors = extract_corridors(poly, axis, c_threshold);

    std::vector<Point2> centers;
    std::vector<std::pair<double, double>> governed;  // arclength intervals
    for (const Corridor& c : corridors) {
        auto cc = cover_corridor(poly, c);
        centers.insert(centers.end(), cc.begin(), cc.end());
        for (const BoundaryPortion& bp : c.portions) {
            double base = poly.vertex_arclength(bp.edge);
            governed.emplace_back(base + bp.lo, base + bp.hi);
        }
    }

    // Complement of the governed intervals on the boundary circle: the short
    // portions, covered by step-2 disks along the arc length.
    double L = poly.perimeter();
    std::sort(governed.begin(), governed.end());
    std::vector<std::pair<double, double>> merged;
    for (auto iv : governed) {
        if (!merged.empty() && iv.first <= merged.back().second + 1e-9)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    auto cover_short = [&](double s0, double s1) {
        double len = s1 - s0;
        if (len <= 1e-9) return;
        int cnt = std::max(1, static_cast<int>(std::ceil(len / 2.0 - 1e-12)));
        double first = s0 + (len - 2.0 * (cnt - 1)) / 2.0;
        for (int j = 0; j < cnt; ++j) {
            double s = std::fmod(first + 2.0 * j + L, L);
            centers.push_back(poly.point_at_arclength(s).position(poly));
        }
    };
    if (merged.empty()) {
        cover_short(0.0, L);
    } else {
        for (size_t k = 0; k + 1 < merged.size(); ++k)
            cover_short(merged[k].second, merged[k + 1].first);
        cover_short(merged.back().second, merged.front().first + L);
    }

    CoverSolution sol;
    sol.centers = std::move(centers);
    sol.k = static_cast<int>(sol.centers.size());
    return sol;
}

} // namespace geocover
