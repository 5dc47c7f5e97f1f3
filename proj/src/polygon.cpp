#include "geocover/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "geocover/errors.hpp"

namespace geocover {

Point2 BoundaryPoint::position(const SimplePolygon& poly) const {
    return lerp(poly.vertex(edge_index), poly.vertex(edge_index + 1), t);
}

SimplePolygon SimplePolygon::validate(const std::vector<Point2>& raw_vertices) {
    if (raw_vertices.size() < 3)
        throw ValidationError(ValidationError::Code::TooFewVertices,
                              "polygon needs at least 3 vertices");
    for (const Point2& p : raw_vertices)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError(ValidationError::Code::ZeroArea,
                                  "non-finite vertex coordinate");

    std::vector<Point2> vs = raw_vertices;
    int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i)
        if (vs[i] == vs[(i + 1) % n])
            throw ValidationError(ValidationError::Code::DuplicateVertex,
                                  "consecutive duplicate vertex");

    double area2 = 0.0;
    for (int i = 0; i < n; ++i) area2 += cross(vs[i], vs[(i + 1) % n]);
    if (area2 == 0.0)
        throw ValidationError(ValidationError::Code::ZeroArea, "zero signed area");
    if (area2 > 0.0) std::reverse(vs.begin(), vs.end());  // canonical: clockwise

    // Merge collinear interior vertices; a spike (reversal) is weakly simple
    // and gets rejected.
    bool changed = true;
    while (changed) {
        changed = false;
        n = static_cast<int>(vs.size());
        if (n < 3)
            throw ValidationError(ValidationError::Code::TooFewVertices,
                                  "degenerate after collinear merge");
        for (int i = 0; i < n; ++i) {
            Point2 a = vs[(i + n - 1) % n], b = vs[i], c = vs[(i + 1) % n];
            if (orient(a, b, c) == 0) {
                if (!on_segment(a, c, b))
                    throw ValidationError(ValidationError::Code::SelfIntersecting,
                                          "boundary spike");
                vs.erase(vs.begin() + i);
                changed = true;
                break;
            }
        }
    }
    n = static_cast<int>(vs.size());

    // Strict simplicity: no two non-adjacent edges may share any point.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n]))
                throw ValidationError(ValidationError::Code::SelfIntersecting,
                                      "self-intersecting boundary");
        }
    }

    SimplePolygon poly;
    poly.vertices_ = std::move(vs);
    poly.finalize();
    return poly;
}

void SimplePolygon::finalize() {
    int n = size();
    edge_lengths_.resize(n);
    cumulative_.resize(n);
    reflex_.resize(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        cumulative_[i] = acc;
        edge_lengths_[i] = dist(vertices_[i], vertices_[(i + 1) % n]);
        acc += edge_lengths_[i];
    }
    perimeter_ = acc;
    for (int i = 0; i < n; ++i) {
        // Clockwise polygon: a clockwise turn is convex, counterclockwise is reflex.
        reflex_[i] = orient(vertex(i - 1), vertex(i), vertex(i + 1)) > 0;
    }
}

BoundaryPoint SimplePolygon::boundary_point(int edge_index, double t) const {
    BoundaryPoint bp;
    bp.edge_index = index(edge_index);
    bp.t = t;
    double s = cumulative_[bp.edge_index] + t * edge_lengths_[bp.edge_index];
    bp.s = std::fmod(s, perimeter_);
    if (bp.s < 0) bp.s += perimeter_;
    return bp;
}

BoundaryPoint SimplePolygon::point_at_arclength(double s) const {
    double L = perimeter_;
    s = std::fmod(s, L);
    if (s < 0) s += L;
    // Last edge whose start arclength is <= s.
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    int i = static_cast<int>(it - cumulative_.begin()) - 1;
    if (i < 0) i = 0;
    double t = (s - cumulative_[i]) / edge_lengths_[i];
    BoundaryPoint bp;
    bp.edge_index = i;
    bp.t = std::clamp(t, 0.0, 1.0);
    bp.s = s;
    return bp;
}

double SimplePolygon::arc_length(const BoundaryPoint& u, const BoundaryPoint& v) const {
    double d = std::fmod(v.s - u.s, perimeter_);
    if (d < 0) d += perimeter_;
    return d;
}

BoundaryArc SimplePolygon::boundary_arc(const BoundaryPoint& u, const BoundaryPoint& v) const {
    return BoundaryArc{u, v, arc_length(u, v)};
}

bool SimplePolygon::on_boundary(Point2 p) const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (point_segment_dist(p, vertex(i), vertex(i + 1)) <= 1e-12) return true;
    return false;
}

bool SimplePolygon::strictly_contains(Point2 p) const {
    if (on_boundary(p)) return false;
    int wn = 0;
    int n = size();
    for (int i = 0; i < n; ++i) {
        Point2 a = vertex(i), b = vertex(i + 1);
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++wn;
        } else {
            if (b.y <= p.y && orient(a, b, p) < 0) --wn;
        }
    }
    return wn != 0;
}

bool SimplePolygon::contains(Point2 p) const {
    return on_boundary(p) || strictly_contains(p);
}

bool SimplePolygon::segment_inside(Point2 a, Point2 b) const {
    if (!contains(a) || !contains(b)) return false;
    if (a == b) return true;
    Point2 ab = b - a;
    double len2 = dot(ab, ab);

    std::vector<double> ts{0.0, 1.0};
    int n = size();
    for (int i = 0; i < n; ++i) {
        Point2 c = vertex(i), d = vertex(i + 1);
        if (!segments_intersect(a, b, c, d)) continue;
        double denom = cross(ab, d - c);
        if (std::abs(denom) > 1e-18) {
            double t = cross(c - a, d - c) / denom;
            if (t > -1e-9 && t < 1.0 + 1e-9) ts.push_back(std::clamp(t, 0.0, 1.0));
        }
        // Endpoint of the edge lying on ab (covers the collinear overlap case).
        for (Point2 q : {c, d}) {
            if (point_segment_dist(q, a, b) <= 1e-12)
                ts.push_back(std::clamp(dot(q - a, ab) / len2, 0.0, 1.0));
        }
    }
    std::sort(ts.begin(), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] - ts[i] < 1e-13) continue;
        Point2 mid = lerp(a, b, 0.5 * (ts[i] + ts[i + 1]));
        if (!contains(mid)) return false;
    }
    return true;
}

} // namespace geocover
