#pragma once

#include <cmath>

namespace geocover {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point2 a, Point2 b) { return !(a == b); }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

inline Point2 lerp(Point2 a, Point2 b, double t) {
    return {(1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y};
}

inline Point2 normalized(Point2 a) {
    double n = norm(a);
    return n > 0.0 ? Point2{a.x / n, a.y / n} : Point2{0.0, 0.0};
}

/// Sign of the signed area of triangle abc: +1 for a counterclockwise turn,
/// -1 for clockwise, 0 for collinear. A floating-point filter decides the
/// easy cases; near-degenerate ones fall back to exact rational arithmetic.
int orient(Point2 a, Point2 b, Point2 c);

/// Distance from p to segment ab.
double point_segment_dist(Point2 p, Point2 a, Point2 b);

/// Closest point on segment ab to p.
Point2 closest_on_segment(Point2 p, Point2 a, Point2 b);

/// True iff segments ab and cd share at least one point (endpoints count).
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

/// True iff ab and cd cross at a single interior point of both.
bool segments_properly_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

/// True iff c lies on the closed segment ab (exact, via orient).
bool on_segment(Point2 a, Point2 b, Point2 c);

} // namespace geocover
