#include "geocover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>

#include "geocover/envelope.hpp"
#include "geocover/errors.hpp"
#include "geocover/greedy.hpp"

namespace geocover {

double brute_force_distance(const SimplePolygon& poly, Point2 u, Point2 v) {
    if (!poly.contains(u) || !poly.contains(v))
        throw PointOutsidePolygon("brute_force_distance: point outside polygon");
    std::vector<Point2> nodes = poly.vertices();
    int iu = -1, iv = -1;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (nodes[i] == u) iu = i;
        if (nodes[i] == v) iv = i;
    }
    if (iu < 0) {
        iu = static_cast<int>(nodes.size());
        nodes.push_back(u);
    }
    if (iv < 0) {
        if (u == v) {
            iv = iu;
        } else {
            iv = static_cast<int>(nodes.size());
            nodes.push_back(v);
        }
    }
    if (iu == iv) return 0.0;

    int m = static_cast<int>(nodes.size());
    std::vector<std::vector<std::pair<int, double>>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (poly.segment_inside(nodes[i], nodes[j])) {
                double w = dist(nodes[i], nodes[j]);
                adj[i].emplace_back(j, w);
                adj[j].emplace_back(i, w);
            }

    std::vector<double> d(m, std::numeric_limits<double>::infinity());
    d[iu] = 0.0;
    using QE = std::pair<double, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    pq.emplace(0.0, iu);
    while (!pq.empty()) {
        auto [dd, i] = pq.top();
        pq.pop();
        if (dd > d[i]) continue;
        if (i == iv) break;
        for (auto [j, w] : adj[i])
            if (d[i] + w < d[j]) {
                d[j] = d[i] + w;
                pq.emplace(d[j], j);
            }
    }
    return d[iv];
}

CoverageReport verify_coverage(const PathEngine& engine, const std::vector<Point2>& centers,
                               double tol) {
    const SimplePolygon& poly = engine.polygon();
    CoverageReport report;
    int n = poly.size();

    struct RawGap {
        double s0, s1, excess;
    };
    std::vector<RawGap> raw;

    for (int e = 0; e < n; ++e) {
        Point2 a = poly.vertex(e), b = poly.vertex(e + 1);

        // Whole edge inside one disk: convexity of the distance along the
        // edge makes the two endpoint checks sufficient.
        bool edge_done = false;
        for (const Point2& c : centers) {
            if (point_segment_dist(c, a, b) > 1.0) continue;
            if (engine.distance(c, a) <= 1.0 + tol && engine.distance(c, b) <= 1.0 + tol) {
                edge_done = true;
                break;
            }
        }
        if (edge_done) continue;

        std::vector<DistanceProfile> profiles;
        for (const Point2& c : centers) {
            // A center farther than 1 + |ab| from the near end covers nothing here.
            if (point_segment_dist(c, a, b) > 1.0 + tol) continue;
            profiles.push_back(engine.distance_profile(c, a, b));
        }

        auto envelope = [&](double t) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : profiles) best = std::min(best, p.eval(t));
            return best;
        };

        std::vector<double> ts = profiles.empty() ? std::vector<double>{0.0, 1.0}
                                                  : envelope_subdivision(profiles, 0.0, 1.0);
        // Split cells at the level-crossing of the active piece with 1 + tol.
        std::vector<double> refined;
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            refined.push_back(ts[i]);
            double tm = 0.5 * (ts[i] + ts[i + 1]);
            for (const auto& prof : profiles) {
                const ProfilePiece& piece = prof.piece_at(tm);
                for (double t : solve_distance_equals(piece.anchor, piece.base, prof.seg_a,
                                                      prof.seg_b, 1.0 + tol, ts[i], ts[i + 1]))
                    refined.push_back(t);
            }
        }
        refined.push_back(1.0);
        std::sort(refined.begin(), refined.end());

        double edge_len = poly.edge_length(e);
        double s_base = poly.vertex_arclength(e);
        for (size_t i = 0; i + 1 < refined.size(); ++i) {
            double t0 = refined[i], t1 = refined[i + 1];
            if (t1 - t0 < 1e-13) continue;
            double tm = 0.5 * (t0 + t1);
            double val = envelope(tm);
            if (val > 1.0 + tol) {
                double excess = std::max({envelope(t0), envelope(t1), val}) - 1.0;
                raw.push_back({s_base + t0 * edge_len, s_base + t1 * edge_len, excess});
            }
        }
    }

    // Merge adjacent raw gaps along arc length.
    std::sort(raw.begin(), raw.end(), [](const RawGap& x, const RawGap& y) { return x.s0 < y.s0; });
    std::vector<RawGap> merged;
    for (const auto& g : raw) {
        if (!merged.empty() && g.s0 - merged.back().s1 < 1e-9) {
            merged.back().s1 = std::max(merged.back().s1, g.s1);
            merged.back().excess = std::max(merged.back().excess, g.excess);
        } else {
            merged.push_back(g);
        }
    }
    for (const auto& g : merged) {
        CoverageGap gap;
        gap.start = poly.point_at_arclength(g.s0);
        gap.end = poly.point_at_arclength(g.s1);
        gap.max_excess = g.excess;
        report.gaps.push_back(gap);
        report.max_uncovered_excess = std::max(report.max_uncovered_excess, g.excess);
    }
    return report;
}

PackingBound packing_lower_bound(const PathEngine& engine, double march_step) {
    const SimplePolygon& poly = engine.polygon();
    PackingBound out;
    double L = poly.perimeter();
    for (double s = 0.0; s < L; s += march_step) {
        Point2 p = poly.point_at_arclength(s).position(poly);
        bool ok = true;
        for (auto it = out.points.rbegin(); it != out.points.rend(); ++it) {
            if (dist(*it, p) > 2.0) continue;  // Euclidean lower-bounds geodesic
            if (engine.distance(*it, p) <= 2.0 + 1e-9) {
                ok = false;
                break;
            }
        }
        if (ok) out.points.push_back(p);
    }
    out.count = static_cast<int>(out.points.size());
    return out;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(size_t bits) { return Bitset((bits + 63) / 64, 0); }

void set_bit(Bitset& b, size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }

bool get_bit(const Bitset& b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

} // namespace

std::optional<OptResult> brute_force_opt(const PathEngine& engine,
                                         const BruteForceOptions& opts) {
    const SimplePolygon& poly = engine.polygon();

    // Candidate centers: interior grid plus boundary edge midpoints.
    std::vector<Point2> candidates;
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Point2& v : poly.vertices()) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    for (double x = minx; x <= maxx + 1e-12; x += opts.center_grid_res)
        for (double y = miny; y <= maxy + 1e-12; y += opts.center_grid_res)
            if (poly.contains({x, y})) candidates.push_back({x, y});
    for (int i = 0; i < poly.size(); ++i)
        candidates.push_back(lerp(poly.vertex(i), poly.vertex(i + 1), 0.5));

    // Sample universe along the boundary; refined by certification failures.
    std::vector<Point2> universe;
    double L = poly.perimeter();
    for (double s = 0.0; s < L; s += opts.boundary_sample_res)
        universe.push_back(poly.point_at_arclength(s).position(poly));

    for (int round = 0; round < 24; ++round) {
        size_t m = universe.size();
        std::vector<Bitset> covers(candidates.size());
        std::vector<int> cover_count(candidates.size(), 0);
        for (size_t c = 0; c < candidates.size(); ++c) {
            covers[c] = make_bitset(m);
            for (size_t i = 0; i < m; ++i) {
                if (dist(candidates[c], universe[i]) > 1.0) continue;
                if (engine.distance(candidates[c], universe[i]) <= 1.0 + 1e-12) {
                    set_bit(covers[c], i);
                    ++cover_count[c];
                }
            }
        }
        int max_cover = 0;
        for (int cc : cover_count) max_cover = std::max(max_cover, cc);
        if (max_cover == 0) return std::nullopt;

        // Candidates sorted by coverage, largest first, for branching order.
        std::vector<int> order(candidates.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return cover_count[x] > cover_count[y]; });

        int best = opts.k_max + 1;
        std::vector<int> best_sel, cur_sel;

        std::function<void(const Bitset&, int)> bnb = [&](const Bitset& covered, int used) {
            int uncovered_first = -1;
            int remaining = 0;
            for (size_t i = 0; i < m; ++i)
                if (!get_bit(covered, i)) {
                    if (uncovered_first < 0) uncovered_first = static_cast<int>(i);
                    ++remaining;
                }
            if (uncovered_first < 0) {
                if (used < best) {
                    best = used;
                    best_sel = cur_sel;
                }
                return;
            }
            if (used + (remaining + max_cover - 1) / max_cover >= best) return;
            if (used + 1 > opts.k_max && used + 1 >= best) return;
            for (int c : order) {
                if (!get_bit(covers[c], uncovered_first)) continue;
                Bitset next = covered;
                for (size_t w = 0; w < next.size(); ++w) next[w] |= covers[c][w];
                cur_sel.push_back(c);
                bnb(next, used + 1);
                cur_sel.pop_back();
            }
        };
        bnb(make_bitset(m), 0);

        if (best > opts.k_max) return std::nullopt;

        OptResult result;
        result.count = best;
        for (int c : best_sel) result.centers.push_back(candidates[c]);

        CoverageReport report = verify_coverage(engine, result.centers, 1e-9);
        if (report.covered()) return result;
        // Sampled cover missed a real gap: add the gap region to the universe.
        for (const auto& gap : report.gaps) {
            double s0 = gap.start.s, s1 = gap.end.s;
            if (s1 < s0) s1 += L;
            for (double s = s0; s <= s1 + 1e-12; s += std::max((s1 - s0) / 4.0, 1e-9))
                universe.push_back(poly.point_at_arclength(s).position(poly));
        }
    }
    return std::nullopt;
}

bool maximality_check(const PathEngine& engine, const CoverSolution& solution, double delta) {
    const SimplePolygon& poly = engine.polygon();
    double L = poly.perimeter();
    for (const IterationRecord& rec : solution.trace) {
        // The wrap-closing disk only mops up the remainder; it makes no
        // maximality claim.
        if (rec.kind == IterationRecord::Kind::FinalWrap) continue;

        double span = poly.arc_length(rec.c_before, rec.c_after);
        std::vector<Point2> sites{rec.c_before.position(poly)};
        int j = rec.c_before.edge_index + 1;
        for (int step = 0; step < poly.size(); ++step, ++j) {
            BoundaryPoint vb = poly.vertex_boundary_point(j);
            double s = poly.arc_length(rec.c_before, vb);
            if (s >= span - 1e-12) break;
            sites.push_back(vb.position(poly));
        }
        sites.push_back(rec.c_after.position(poly));

        if (geodesic_center(engine, sites).radius > 1.0 + 1e-9) return false;

        double s_ext = std::fmod(rec.c_after.s + delta, L);
        sites.push_back(poly.point_at_arclength(s_ext).position(poly));
        if (geodesic_center(engine, sites).radius <= 1.0) return false;
    }
    return true;
}

} // namespace geocover
