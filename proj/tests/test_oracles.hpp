#pragma once

#include <algorithm>
#include <vector>

#include "geocover/path_engine.hpp"

namespace geocover::testing {

/// Independent minimax oracle: coarse grid over the bounding box, then
/// repeated zoom around the incumbent. Accuracy ~1e-8 * diameter.
inline std::pair<Point2, double> grid_minimax(const PathEngine& engine,
                                              const std::vector<Point2>& sites,
                                              int rounds = 8) {
    const SimplePolygon& poly = engine.polygon();
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Point2& v : poly.vertices()) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    auto ecc = [&](Point2 p) {
        double worst = 0.0;
        for (const Point2& s : sites) worst = std::max(worst, engine.distance(p, s));
        return worst;
    };
    Point2 best = sites[0];
    double best_r = ecc(best);
    for (const Point2& s : sites) {
        double r = ecc(s);
        if (r < best_r) {
            best_r = r;
            best = s;
        }
    }
    double hx = (maxx - minx) / 2.0, hy = (maxy - miny) / 2.0;
    Point2 cen{(minx + maxx) / 2.0, (miny + maxy) / 2.0};
    const int N = 40;
    for (int round = 0; round < rounds; ++round) {
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= N; ++j) {
                Point2 p{cen.x - hx + 2.0 * hx * i / N, cen.y - hy + 2.0 * hy * j / N};
                if (!poly.contains(p)) continue;
                double r = ecc(p);
                if (r < best_r) {
                    best_r = r;
                    best = p;
                }
            }
        cen = best;
        hx = std::max(4.0 * hx / N, 1e-12);
        hy = std::max(4.0 * hy / N, 1e-12);
    }
    // Grid zoom stalls in the narrow valley of a minimax objective; polish
    // with Nelder-Mead (objective is convex, so this converges reliably).
    auto f = [&](Point2 p) {
        return poly.contains(p) ? ecc(p) : std::numeric_limits<double>::infinity();
    };
    double diam = std::max(maxx - minx, maxy - miny);
    for (double size : {diam / 50.0, diam / 5000.0}) {
        Point2 v[3] = {best, best + Point2{size, 0.0}, best + Point2{0.0, size}};
        double fv[3] = {f(v[0]), f(v[1]), f(v[2])};
        for (int iter = 0; iter < 400; ++iter) {
            int lo = 0, hi = 0;
            for (int i = 1; i < 3; ++i) {
                if (fv[i] < fv[lo]) lo = i;
                if (fv[i] > fv[hi]) hi = i;
            }
            int mid = 3 - lo - hi;
            if (lo == hi) mid = (lo + 1) % 3;
            if (dist(v[lo], v[hi]) < 1e-12 && std::abs(fv[hi] - fv[lo]) < 1e-14) break;
            Point2 cen2 = 0.5 * (v[lo] + v[mid]);
            Point2 refl = cen2 + (cen2 - v[hi]);
            double fr = f(refl);
            if (fr < fv[lo]) {
                Point2 exp2 = cen2 + 2.0 * (cen2 - v[hi]);
                double fe = f(exp2);
                if (fe < fr) {
                    v[hi] = exp2;
                    fv[hi] = fe;
                } else {
                    v[hi] = refl;
                    fv[hi] = fr;
                }
            } else if (fr < fv[mid]) {
                v[hi] = refl;
                fv[hi] = fr;
            } else {
                Point2 con = cen2 + 0.5 * (v[hi] - cen2);
                double fc = f(con);
                if (fc < fv[hi]) {
                    v[hi] = con;
                    fv[hi] = fc;
                } else {
                    for (int i = 0; i < 3; ++i)
                        if (i != lo) {
                            v[i] = 0.5 * (v[i] + v[lo]);
                            fv[i] = f(v[i]);
                        }
                }
            }
        }
        for (int i = 0; i < 3; ++i)
            if (fv[i] < best_r) {
                best_r = fv[i];
                best = v[i];
            }
    }
    return {best, best_r};
}

} // namespace geocover::testing
