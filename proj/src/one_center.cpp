#include "geocover/one_center.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "geocover/errors.hpp"

namespace geocover {

namespace {

double eccentricity(const PathEngine& engine, Point2 p, const std::vector<Point2>& sites) {
    double worst = 0.0;
    for (const Point2& s : sites) worst = std::max(worst, engine.distance(p, s));
    return worst;
}

struct LocalDist {
    Point2 anchor;   // last bend before x; distance is base + |x - anchor|
    double base;
    double value;
};

LocalDist local_distance(const PathEngine& engine, Point2 site, Point2 x) {
    GeodesicPath path = engine.shortest_path(site, x);
    LocalDist out;
    out.value = path.length;
    if (path.points.size() < 2) {
        out.anchor = site;
        out.base = 0.0;
    } else {
        out.anchor = path.points[path.points.size() - 2];
        out.base = path.length - dist(out.anchor, x);
    }
    return out;
}

/// Point equidistant from three sites, found by Newton iteration on the
/// anchor-linearized distance functions. Returns nothing on divergence.
std::optional<Point2> equidistant_point(const PathEngine& engine, Point2 a, Point2 b, Point2 c,
                                        Point2 seed) {
    const SimplePolygon& poly = engine.polygon();
    Point2 x = seed;
    if (!poly.contains(x)) return std::nullopt;
    for (int iter = 0; iter < 80; ++iter) {
        LocalDist da = local_distance(engine, a, x);
        LocalDist db = local_distance(engine, b, x);
        LocalDist dc = local_distance(engine, c, x);
        double f1 = da.value - dc.value;
        double f2 = db.value - dc.value;
        double scale = 1.0 + da.value + db.value + dc.value;
        if (std::abs(f1) < 1e-12 * scale && std::abs(f2) < 1e-12 * scale) return x;

        auto grad = [&](const LocalDist& d) -> Point2 {
            double r = dist(x, d.anchor);
            if (r < 1e-14) return {0.0, 0.0};
            return (x - d.anchor) / r;
        };
        Point2 ga = grad(da), gb = grad(db), gc = grad(dc);
        double j11 = ga.x - gc.x, j12 = ga.y - gc.y;
        double j21 = gb.x - gc.x, j22 = gb.y - gc.y;
        double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-14) return std::nullopt;
        Point2 step{-(j22 * f1 - j12 * f2) / det, -(-j21 * f1 + j11 * f2) / det};
        double len = norm(step);
        if (len > 1e9) return std::nullopt;
        // Damp until the step stays inside the polygon.
        Point2 next = x + step;
        int damp = 0;
        while (!poly.contains(next) && damp++ < 50) {
            step = 0.5 * step;
            next = x + step;
        }
        if (damp >= 50) return std::nullopt;
        x = next;
    }
    return std::nullopt;
}

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-14) return (1.0 / 3.0) * (a + b + c);
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    return {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
            (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
}

/// Compass pattern search on the max-distance objective; robust fallback for
/// the rare configurations where candidate enumeration fails to certify.
Point2 descent_refine(const PathEngine& engine, Point2 start, const std::vector<Point2>& sites,
                      double h0, double h_min) {
    const SimplePolygon& poly = engine.polygon();
    Point2 x = start;
    double fx = eccentricity(engine, x, sites);
    double h = h0;
    while (h > h_min) {
        bool moved = false;
        for (int k = 0; k < 8; ++k) {
            double ang = k * 3.14159265358979323846 / 4.0;
            Point2 y = x + Point2{h * std::cos(ang), h * std::sin(ang)};
            if (!poly.contains(y)) continue;
            double fy = eccentricity(engine, y, sites);
            if (fy < fx - 1e-15) {
                x = y;
                fx = fy;
                moved = true;
                break;
            }
        }
        if (!moved) h *= 0.5;
    }
    return x;
}

/// Local optimality probe: fails only when a nearby point improves the
/// radius by more than 1e-6.
bool certify_local(const PathEngine& engine, Point2 x, double radius,
                   const std::vector<Point2>& sites) {
    const SimplePolygon& poly = engine.polygon();
    for (double h : {1e-3, 1e-4, 1e-5}) {
        for (int k = 0; k < 16; ++k) {
            double ang = k * 3.14159265358979323846 / 8.0;
            Point2 y = x + Point2{h * std::cos(ang), h * std::sin(ang)};
            if (!poly.contains(y)) continue;
            if (eccentricity(engine, y, sites) < radius - 1e-6) return false;
        }
    }
    return true;
}

} // namespace

CenterResult geodesic_center(const PathEngine& engine, const std::vector<Point2>& sites) {
    if (sites.empty()) throw std::invalid_argument("geodesic_center: empty site set");
    const SimplePolygon& poly = engine.polygon();
    for (const Point2& s : sites)
        if (!poly.contains(s)) throw PointOutsidePolygon("geodesic_center: site outside polygon");

    int m = static_cast<int>(sites.size());
    Point2 best = sites[0];
    double best_r = eccentricity(engine, best, sites);
    auto consider = [&](Point2 x) {
        double r = eccentricity(engine, x, sites);
        if (r < best_r) {
            best_r = r;
            best = x;
        }
    };
    for (int i = 1; i < m; ++i) consider(sites[i]);

    // Pair candidates: geodesic path midpoints.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            GeodesicPath path = engine.shortest_path(sites[i], sites[j]);
            if (path.length / 2.0 > best_r + 1e-12) continue;  // cannot win
            consider(engine.point_along_path(path, path.length / 2.0));
        }

    // Triple candidates: equidistant points. A triple whose own pairwise
    // half-distance already meets the incumbent cannot improve it.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                double lb = std::max({engine.distance(sites[i], sites[j]),
                                      engine.distance(sites[i], sites[k]),
                                      engine.distance(sites[j], sites[k])}) /
                            2.0;
                if (lb > best_r + 1e-12) continue;
                Point2 seed = circumcenter(sites[i], sites[j], sites[k]);
                if (!poly.contains(seed))
                    seed = (1.0 / 3.0) * (sites[i] + sites[j] + sites[k]);
                if (!poly.contains(seed)) seed = best;
                auto eq = equidistant_point(engine, sites[i], sites[j], sites[k], seed);
                if (eq) consider(*eq);
            }

    if (!certify_local(engine, best, best_r, sites)) {
        Point2 refined = descent_refine(engine, best, sites, 0.05, 1e-9);
        double rr = eccentricity(engine, refined, sites);
        if (rr < best_r) {
            best = refined;
            best_r = rr;
        }
        if (!certify_local(engine, best, best_r, sites))
            throw NumericalCertificationFailure("geodesic_center: local optimality not certified");
    }

    CenterResult out;
    out.center = best;
    out.radius = best_r;
    std::vector<std::pair<double, Point2>> by_dist;
    for (const Point2& s : sites) by_dist.emplace_back(engine.distance(best, s), s);
    std::sort(by_dist.begin(), by_dist.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [d, s] : by_dist)
        if (d >= best_r - 1e-9 && static_cast<int>(out.determiners.size()) < 3)
            out.determiners.push_back(s);
    return out;
}

std::vector<Point2> cover_sites(const SimplePolygon& poly, const BoundaryPoint& c, int v) {
    std::vector<Point2> sites{c.position(poly)};
    int first = poly.index(c.edge_index + 1);  // first vertex strictly clockwise after c
    int target = poly.index(v);
    int i = first;
    for (int guard = 0; guard <= poly.size(); ++guard) {
        Point2 p = poly.vertex(i);
        if (!(p == sites.front())) sites.push_back(p);
        if (i == target) break;
        i = poly.index(i + 1);
    }
    return sites;
}

TestCoverResult test_cover_detail(const PathEngine& engine, const BoundaryPoint& c, int v) {
    TestCoverResult out;
    std::vector<Point2> sites = cover_sites(engine.polygon(), c, v);
    out.site_count = static_cast<int>(sites.size());
    out.center = geodesic_center(engine, sites);
    out.ok = out.center.radius <= 1.0 + 1e-9;
    return out;
}

bool test_cover(const PathEngine& engine, const BoundaryPoint& c, int v) {
    return test_cover_detail(engine, c, v).ok;
}

} // namespace geocover
