#include "geocover/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace geocover {

namespace {

struct Quad {
    double a, b, c;  // |anchor - e(t)|^2 = a t^2 + b t + c
};

Quad squared_dist_quad(Point2 anchor, Point2 seg_a, Point2 seg_b) {
    Point2 d = seg_b - seg_a;
    Point2 w = seg_a - anchor;
    return {dot(d, d), 2.0 * dot(d, w), dot(w, w)};
}

void push_checked(std::vector<double>& out, double t, double lo, double hi) {
    if (!std::isfinite(t)) return;
    if (t < lo - 1e-12 || t > hi + 1e-12) return;
    out.push_back(std::clamp(t, lo, hi));
}

std::vector<double> quadratic_roots(double a, double b, double c) {
    std::vector<double> roots;
    if (std::abs(a) < 1e-300) {
        if (std::abs(b) > 1e-300) roots.push_back(-c / b);
        return roots;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return roots;
    double sq = std::sqrt(disc);
    // Numerically stable pairing.
    double q = -0.5 * (b + (b >= 0 ? sq : -sq));
    roots.push_back(q / a);
    if (q != 0.0) roots.push_back(c / q);
    else roots.push_back(0.0);
    return roots;
}

} // namespace

std::vector<double> solve_distance_equals(Point2 anchor, double base, Point2 seg_a,
                                          Point2 seg_b, double value, double lo, double hi) {
    std::vector<double> out;
    double r = value - base;
    if (r < 0.0) return out;
    Quad q = squared_dist_quad(anchor, seg_a, seg_b);
    for (double t : quadratic_roots(q.a, q.b, q.c - r * r)) push_checked(out, t, lo, hi);
    // Verify and deduplicate.
    std::sort(out.begin(), out.end());
    std::vector<double> verified;
    for (double t : out) {
        Point2 p = lerp(seg_a, seg_b, t);
        if (std::abs(base + dist(anchor, p) - value) > 1e-7) continue;
        if (!verified.empty() && t - verified.back() < 1e-12) continue;
        verified.push_back(t);
    }
    return verified;
}

std::vector<double> solve_pieces_equal(Point2 a1, double b1, Point2 a2, double b2,
                                       Point2 seg_a, Point2 seg_b, double lo, double hi) {
    // r1(t) - r2(t) = b2 - b1 with r_i = sqrt(q_i(t)); q_1 - q_2 is linear
    // because the quadratic coefficient |seg_b - seg_a|^2 is shared.
    Quad q1 = squared_dist_quad(a1, seg_a, seg_b);
    Quad q2 = squared_dist_quad(a2, seg_a, seg_b);
    double delta = b2 - b1;
    std::vector<double> candidates;
    double lb = q1.b - q2.b;
    double lc = q1.c - q2.c - delta * delta;
    if (std::abs(delta) < 1e-300) {
        if (std::abs(lb) > 1e-300) candidates.push_back(-lc / lb);
    } else {
        // (lb t + lc)^2 = 4 delta^2 (q2.a t^2 + q2.b t + q2.c)
        double A = lb * lb - 4.0 * delta * delta * q2.a;
        double B = 2.0 * lb * lc - 4.0 * delta * delta * q2.b;
        double C = lc * lc - 4.0 * delta * delta * q2.c;
        for (double t : quadratic_roots(A, B, C)) candidates.push_back(t);
    }
    std::vector<double> out;
    for (double t : candidates) {
        if (!std::isfinite(t) || t < lo - 1e-12 || t > hi + 1e-12) continue;
        double tc = std::clamp(t, lo, hi);
        Point2 p = lerp(seg_a, seg_b, tc);
        if (std::abs((b1 + dist(a1, p)) - (b2 + dist(a2, p))) > 1e-7) continue;
        out.push_back(tc);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double x, double y) { return y - x < 1e-12; }),
              out.end());
    return out;
}

std::vector<double> envelope_subdivision(const std::vector<DistanceProfile>& profiles,
                                         double lo, double hi) {
    std::vector<double> ts{lo, hi};
    for (const auto& prof : profiles)
        for (const auto& piece : prof.pieces) {
            if (piece.t0 > lo && piece.t0 < hi) ts.push_back(piece.t0);
            if (piece.t1 > lo && piece.t1 < hi) ts.push_back(piece.t1);
        }
    for (size_t i = 0; i < profiles.size(); ++i) {
        for (size_t j = i + 1; j < profiles.size(); ++j) {
            for (const auto& p1 : profiles[i].pieces) {
                for (const auto& p2 : profiles[j].pieces) {
                    double a = std::max({p1.t0, p2.t0, lo});
                    double b = std::min({p1.t1, p2.t1, hi});
                    if (a >= b) continue;
                    for (double t : solve_pieces_equal(p1.anchor, p1.base, p2.anchor, p2.base,
                                                       profiles[i].seg_a, profiles[i].seg_b,
                                                       a, b))
                        ts.push_back(t);
                }
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double x, double y) { return y - x < 1e-13; }),
             ts.end());
    if (ts.back() < hi) ts.push_back(hi);
    return ts;
}

} // namespace geocover
