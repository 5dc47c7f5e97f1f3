#include "geocover/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geocover/envelope.hpp"
#include "geocover/errors.hpp"

namespace geocover {

namespace {

/// |Q| for the TestCover subproblem at (c, v): vertices of the boundary
/// portion (including c) plus the interior vertices of pi(v, c).
int subproblem_vertices(const PathEngine& engine, const BoundaryPoint& c, int v) {
    const SimplePolygon& poly = engine.polygon();
    int sites = static_cast<int>(cover_sites(poly, c, v).size());
    GeodesicPath path = engine.shortest_path(poly.vertex(v), c.position(poly));
    int interior = std::max(0, static_cast<int>(path.points.size()) - 2);
    return sites + interior;
}

} // namespace

void cover_long_segment(const PathEngine& engine, CoverState& state) {
    const SimplePolygon& poly = engine.polygon();
    Point2 cp = state.c.position(poly);
    Point2 vn = poly.vertex(state.c.edge_index + 1);
    double d = dist(cp, vn);
    if (d <= 2.0) return;
    int m = static_cast<int>(std::ceil(d / 2.0)) - 1;
    Point2 dir = (vn - cp) / d;
    double s0 = state.c.s;
    double L = poly.perimeter();
    for (int j = 1; j <= m; ++j) {
        IterationRecord rec;
        rec.kind = IterationRecord::Kind::LongSegment;
        rec.c_before = poly.point_at_arclength(std::fmod(s0 + 2.0 * (j - 1), L));
        rec.c_after = poly.point_at_arclength(std::fmod(s0 + 2.0 * j, L));
        rec.center = cp + (2.0 * j - 1.0) * dir;
        state.centers.push_back(rec.center);
        state.iteration_trace.push_back(rec);
    }
    state.c = poly.point_at_arclength(std::fmod(s0 + 2.0 * m, L));
    state.covered_length += 2.0 * m;
}

int find_first_uncoverable(const PathEngine& engine, const BoundaryPoint& c, int i,
                           int cap_vertex, std::vector<std::pair<int, bool>>* transcript,
                           long long* sum_q) {
    const SimplePolygon& poly = engine.polygon();
    int n = poly.size();
    int o_cap = ((cap_vertex - i) % n + n) % n;
    if (o_cap == 0) return -1;  // the very next vertex is the wrap target

    auto probe = [&](int o) {
        int v = poly.index(i + o);
        bool ok = test_cover(engine, c, v);
        if (transcript) transcript->emplace_back(v, ok);
        if (sum_q) *sum_q += subproblem_vertices(engine, c, v);
        return ok;
    };

    // Exponential phase; offset 0 (vertex i itself) is coverable by the
    // caller's precondition.
    int last_true = 0;
    int first_false = -1;
    for (int o = 1;; o *= 2) {
        if (o >= o_cap) {
            if (probe(o_cap)) return -1;
            first_false = o_cap;
            break;
        }
        if (probe(o)) {
            last_true = o;
        } else {
            first_false = o;
            break;
        }
    }
    while (first_false - last_true > 1) {
        int mid = last_true + (first_false - last_true) / 2;
        if (probe(mid))
            last_true = mid;
        else
            first_false = mid;
    }
    return poly.index(i + first_false);
}

AugmentResult augment_short(const PathEngine& engine, const BoundaryPoint& c, int u) {
    const SimplePolygon& poly = engine.polygon();
    int edge = poly.index(u - 1);
    Point2 seg_a = poly.vertex(edge);
    Point2 seg_b = poly.vertex(u);

    std::vector<Point2> sites = cover_sites(poly, c, edge);
    IntersectionRegion region{sites};

    std::vector<DistanceProfile> profiles;
    for (const Point2& s : sites) profiles.push_back(engine.distance_profile(s, seg_a, seg_b));

    auto env_max = [&](double t) {
        double best = 0.0;
        for (const auto& p : profiles) best = std::max(best, p.eval(t));
        return best;
    };

    // Roots of F(t) = max-site distance = 2, per subdivision cell of the
    // upper envelope (closed form per active piece).
    std::vector<double> cells = envelope_subdivision(profiles, 0.0, 1.0);
    std::vector<double> f_roots;
    for (size_t ci = 0; ci + 1 < cells.size(); ++ci) {
        double t0 = cells[ci], t1 = cells[ci + 1];
        if (t1 - t0 < 1e-14) continue;
        double tm = 0.5 * (t0 + t1);
        const DistanceProfile* top = nullptr;
        double top_v = -1.0;
        for (const auto& p : profiles) {
            double v = p.eval(tm);
            if (v > top_v) {
                top_v = v;
                top = &p;
            }
        }
        const ProfilePiece& piece = top->piece_at(tm);
        for (double t : solve_distance_equals(piece.anchor, piece.base, seg_a, seg_b, 2.0, t0, t1))
            if (std::abs(env_max(t) - 2.0) <= 1e-7) f_roots.push_back(t);
    }
    std::sort(f_roots.begin(), f_roots.end());
    f_roots.erase(std::unique(f_roots.begin(), f_roots.end(),
                              [](double a, double b) { return std::abs(a - b) < 1e-10; }),
                  f_roots.end());

    AugmentResult out;
    out.f_roots = f_roots;

    // Candidate x1: largest F-root whose Lemma-1 midpoint lies in A.
    bool have_x1 = false;
    double t_x1 = 0.0;
    Point2 center_x1;
    for (auto it = f_roots.rbegin(); it != f_roots.rend(); ++it) {
        double t = *it;
        Point2 x = lerp(seg_a, seg_b, t);
        const Point2* q = nullptr;
        double dq = -1.0;
        for (const Point2& s : sites) {
            double d = engine.distance(s, x);
            if (d > dq) {
                dq = d;
                q = &s;
            }
        }
        if (std::abs(dq - 2.0) > 1e-7) continue;
        GeodesicPath path = engine.shortest_path(*q, x);
        Point2 mid = engine.point_along_path(path, 1.0);
        if (region_contains(engine, region, mid)) {
            have_x1 = true;
            t_x1 = t;
            center_x1 = mid;
            break;
        }
    }

    // Candidate x2: largest root of G(t) = min distance to I = 1.
    bool have_x2 = false;
    double t_x2 = 0.0;
    Point2 center_x2;
    std::vector<IntersectionPoint> I = disk_disk_intersections(engine, region);
    if (!I.empty()) {
        std::vector<DistanceProfile> iprofiles;
        for (const auto& ip : I) iprofiles.push_back(engine.distance_profile(ip.p, seg_a, seg_b));
        auto env_min = [&](double t) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : iprofiles) best = std::min(best, p.eval(t));
            return best;
        };
        std::vector<double> icells = envelope_subdivision(iprofiles, 0.0, 1.0);
        std::vector<double> g_roots;
        for (size_t ci = 0; ci + 1 < icells.size(); ++ci) {
            double t0 = icells[ci], t1 = icells[ci + 1];
            if (t1 - t0 < 1e-14) continue;
            double tm = 0.5 * (t0 + t1);
            const DistanceProfile* low = nullptr;
            double low_v = std::numeric_limits<double>::infinity();
            for (const auto& p : iprofiles) {
                double v = p.eval(tm);
                if (v < low_v) {
                    low_v = v;
                    low = &p;
                }
            }
            const ProfilePiece& piece = low->piece_at(tm);
            for (double t :
                 solve_distance_equals(piece.anchor, piece.base, seg_a, seg_b, 1.0, t0, t1))
                if (std::abs(env_min(t) - 1.0) <= 1e-7) g_roots.push_back(t);
        }
        std::sort(g_roots.begin(), g_roots.end());
        for (auto it = g_roots.rbegin(); it != g_roots.rend(); ++it) {
            double t = *it;
            Point2 x = lerp(seg_a, seg_b, t);
            const IntersectionPoint* realizer = nullptr;
            double di = std::numeric_limits<double>::infinity();
            for (const auto& ip : I) {
                double d = engine.distance(ip.p, x);
                if (d < di) {
                    di = d;
                    realizer = &ip;
                }
            }
            if (std::abs(di - 1.0) > 1e-7) continue;
            have_x2 = true;
            t_x2 = t;
            center_x2 = realizer->p;
            break;
        }
    }

    // Step 3: x2 wins only when x1 is absent or x2 is strictly closer to v_u.
    if (have_x1 && (!have_x2 || t_x2 <= t_x1 + 1e-12)) {
        out.c_next = poly.boundary_point(edge, t_x1);
        out.center = center_x1;
        out.branch = IterationRecord::Branch::X1;
    } else if (have_x2) {
        out.c_next = poly.boundary_point(edge, t_x2);
        out.center = center_x2;
        out.branch = IterationRecord::Branch::X2;
    } else {
        throw NumericalCertificationFailure(
            "augment_short: no maximal-extension root certified on edge");
    }
    return out;
}

CoverSolution contiguous_greedy(const PathEngine& engine, int start_vertex) {
    const SimplePolygon& poly = engine.polygon();
    int n = poly.size();
    start_vertex = poly.index(start_vertex);
    double L = poly.perimeter();

    CoverState state;
    state.c = poly.vertex_boundary_point(start_vertex);
    long long sum_q = 0;

    int guard = 0;
    while (state.covered_length < L - 1e-9) {
        if (++guard > 100 * n + static_cast<int>(L))
            throw NumericalCertificationFailure("contiguous_greedy: no progress");

        Point2 cp = state.c.position(poly);
        Point2 vn = poly.vertex(state.c.edge_index + 1);
        if (dist(cp, vn) > 2.0) {
            cover_long_segment(engine, state);
            continue;
        }

        int i = poly.index(state.c.edge_index + 1);
        IterationRecord rec;
        rec.c_before = state.c;
        int u = find_first_uncoverable(engine, state.c, i, start_vertex,
                                       &rec.probe_transcript, &sum_q);
        if (u < 0) {
            // Everything through the wrap target is coverable: one last disk.
            auto det = test_cover_detail(engine, state.c, start_vertex);
            sum_q += subproblem_vertices(engine, state.c, start_vertex);
            rec.kind = IterationRecord::Kind::FinalWrap;
            rec.center = det.center.center;
            rec.c_after = poly.vertex_boundary_point(start_vertex);
            rec.subproblem_size = det.site_count;
            state.centers.push_back(rec.center);
            state.iteration_trace.push_back(rec);
            state.covered_length = L;
            break;
        }

        AugmentResult aug = augment_short(engine, state.c, u);
        rec.kind = IterationRecord::Kind::Augment;
        rec.branch = aug.branch;
        rec.v_u = u;
        rec.center = aug.center;
        rec.c_after = aug.c_next;
        rec.f_roots = aug.f_roots;
        rec.subproblem_size = subproblem_vertices(engine, state.c, poly.index(u - 1));
        sum_q += rec.subproblem_size;

        double advance = poly.arc_length(state.c, aug.c_next);
        if (advance <= 0.0)
            throw NumericalCertificationFailure("contiguous_greedy: zero advance");
        state.covered_length = std::min(L, state.covered_length + advance);
        state.c = aug.c_next;
        state.centers.push_back(aug.center);
        state.iteration_trace.push_back(rec);
    }

    CoverSolution sol;
    sol.centers = state.centers;
    sol.k = static_cast<int>(state.centers.size());
    sol.sum_q = sum_q;
    sol.start_vertex = start_vertex;
    sol.trace = std::move(state.iteration_trace);
    return sol;
}

} // namespace geocover
