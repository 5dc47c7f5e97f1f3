#include "geocover/geometry.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace geocover {

namespace {

int orient_exact(Point2 a, Point2 b, Point2 c) {
    mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    mpq_class det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sgn(det);
}

} // namespace

int orient(Point2 a, Point2 b, Point2 c) {
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum = std::abs(detleft) + std::abs(detright);
    // Filter constant is conservative w.r.t. Shewchuk's ccwerrboundA.
    if (std::abs(det) > 1e-14 * detsum) return det > 0.0 ? 1 : -1;
    if (det == 0.0 && detsum == 0.0) return 0;
    return orient_exact(a, b, c);
}

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
    return dist(p, closest_on_segment(p, a, b));
}

Point2 closest_on_segment(Point2 p, Point2 a, Point2 b) {
    Point2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return lerp(a, b, t);
}

bool on_segment(Point2 a, Point2 b, Point2 c) {
    if (orient(a, b, c) != 0) return false;
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

bool segments_properly_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    if (segments_properly_intersect(a, b, c, d)) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) ||
           on_segment(c, d, a) || on_segment(c, d, b);
}

} // namespace geocover
