#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "geocover/corridor.hpp"
#include "geocover/verify.hpp"
#include "test_fixtures.hpp"

using namespace geocover;
using namespace geocover::testing;

namespace {

std::vector<Point2> regular_polygon(int n, double circumradius) {
    std::vector<Point2> vs;
    for (int i = 0; i < n; ++i) {
        double ang = -2.0 * M_PI * i / n;
        vs.push_back({circumradius * std::cos(ang), circumradius * std::sin(ang)});
    }
    return vs;
}

// Comb: 2.5-wide base of height 0.3 with three 0.5-wide teeth rising to 5.3.
std::vector<Point2> comb() {
    return {{0, 0},     {0, 5.3},   {0.5, 5.3}, {0.5, 0.3}, {1, 0.3},   {1, 5.3},
            {1.5, 5.3}, {1.5, 0.3}, {2, 0.3},   {2, 5.3},   {2.5, 5.3}, {2.5, 0}};
}

// Every feature's distance at p, sorted ascending.
std::vector<double> all_feature_distances(const SimplePolygon& poly, Point2 p) {
    std::vector<double> ds;
    for (int e = 0; e < poly.size(); ++e)
        ds.push_back(feature_distance(poly, {MedialFeature::Kind::Edge, e}, p));
    for (int v = 0; v < poly.size(); ++v)
        if (poly.reflex(v))
            ds.push_back(feature_distance(poly, {MedialFeature::Kind::ReflexVertex, v}, p));
    std::sort(ds.begin(), ds.end());
    return ds;
}

void check_axis_invariants(const SimplePolygon& poly, const MedialAxis& axis) {
    for (const MedialEdge& me : axis.edges) {
        for (int k = 0; k <= 200; ++k) {
            Point2 p = me.point_at(k / 200.0);
            double d1 = feature_distance(poly, me.f1, p);
            double d2 = feature_distance(poly, me.f2, p);
            CHECK(std::abs(d1 - d2) <= 1e-7);
            auto ds = all_feature_distances(poly, p);
            CHECK(ds.front() >= std::min(d1, d2) - 1e-7);
        }
    }
}

} // namespace

TEST_CASE("8x1 rectangle axis: spine plus 4 corner bisectors") {
    auto poly = SimplePolygon::validate(rectangle(8.0, 1.0));
    MedialAxis axis = medial_axis(poly);
    REQUIRE(axis.edges.size() == 5);
    int spines = 0, diagonals = 0;
    for (const auto& me : axis.edges) {
        CHECK(me.geometry == MedialEdge::Geometry::Segment);
        if (me.length > 2.0) {
            ++spines;
            CHECK(me.length == doctest::Approx(7.0).epsilon(1e-4));
            CHECK(std::min(me.p0.x, me.p1.x) == doctest::Approx(0.5).epsilon(1e-4));
            CHECK(std::max(me.p0.x, me.p1.x) == doctest::Approx(7.5).epsilon(1e-4));
            CHECK(me.p0.y == doctest::Approx(0.5));
        } else {
            ++diagonals;
            CHECK(me.length == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
        }
    }
    CHECK(spines == 1);
    CHECK(diagonals == 4);
    // Tree: 6 endpoint nodes, 5 edges, connected.
    CHECK(axis.node_count == 6);
    CHECK(static_cast<int>(axis.edges.size()) == axis.node_count - 1);
    check_axis_invariants(poly, axis);
}

TEST_CASE("convex polygon axis has no parabolic arcs and matches the grid oracle") {
    auto poly = SimplePolygon::validate(regular_polygon(10, 2.0));
    MedialAxis axis = medial_axis(poly);
    REQUIRE(!axis.edges.empty());
    for (const auto& me : axis.edges) CHECK(me.geometry == MedialEdge::Geometry::Segment);
    check_axis_invariants(poly, axis);

    // Near-equidistant interior points must lie near some axis edge.
    std::mt19937_64 rng(3);
    int tested = 0;
    for (int it = 0; it < 4000 && tested < 200; ++it) {
        Point2 p = random_interior_point(poly, rng);
        auto ds = all_feature_distances(poly, p);
        if (ds[1] - ds[0] > 5e-3) continue;
        ++tested;
        double best = 1e300;
        for (const auto& me : axis.edges)
            for (int k = 0; k <= 200; ++k)
                best = std::min(best, dist(p, me.point_at(k / 200.0)));
        CHECK(best < 0.05);
    }
    CHECK(tested >= 30);
}

TEST_CASE("L-shape axis contains a parabolic arc focused at the reflex vertex") {
    auto poly = SimplePolygon::validate(l_shape());
    int reflex = -1;
    for (int i = 0; i < poly.size(); ++i)
        if (poly.reflex(i)) reflex = i;
    REQUIRE(reflex >= 0);
    REQUIRE(dist(poly.vertex(reflex), {1.0, 1.0}) < 1e-12);

    MedialAxis axis = medial_axis(poly);
    bool parabola = false;
    for (const auto& me : axis.edges)
        if (me.geometry == MedialEdge::Geometry::Parabola &&
            me.f1.kind == MedialFeature::Kind::ReflexVertex && me.f1.index == reflex)
            parabola = true;
    CHECK(parabola);
    check_axis_invariants(poly, axis);
}

TEST_CASE("extract_corridors") {
    {
        auto poly = SimplePolygon::validate(rectangle(8.0, 1.0));
        auto corridors = extract_corridors(poly, medial_axis(poly), 2.5);
        REQUIRE(corridors.size() == 1);
        REQUIRE(corridors[0].portions.size() == 2);
        for (const auto& bp : corridors[0].portions) {
            CHECK(bp.lo == doctest::Approx(0.5).epsilon(1e-3));
            CHECK(bp.hi == doctest::Approx(7.5).epsilon(1e-3));
        }
    }
    {
        auto poly = SimplePolygon::validate(square(1.0));
        CHECK(extract_corridors(poly, medial_axis(poly), 2.5).empty());
    }
    {
        auto poly = SimplePolygon::validate(comb());
        auto corridors = extract_corridors(poly, medial_axis(poly), 2.5);
        CHECK(corridors.size() == 3);  // one spine per tooth
        for (const auto& c : corridors) {
            CHECK(c.axis.length >= 4.0);
            // Tooth spines are vertical.
            CHECK(std::abs(c.axis.p0.x - c.axis.p1.x) < 1e-6);
        }
    }
}

TEST_CASE("cover_corridor: wide corridor stays axis-centered") {
    auto poly = SimplePolygon::validate(rectangle(8.0, 1.0));
    auto corridors = extract_corridors(poly, medial_axis(poly), 2.5);
    REQUIRE(corridors.size() == 1);
    auto centers = cover_corridor(poly, corridors[0]);
    // Spacing sqrt(3): ceil(7 / sqrt(3)) = 5 axis disks, no boundary disks.
    CHECK(centers.size() == 5);
    for (const Point2& c : centers) CHECK(c.y == doctest::Approx(0.5).epsilon(1e-6));
    // Per-corridor accounting: governed boundary totals 14.
    CHECK(static_cast<int>(centers.size()) <= 14 / 2 + 2);
}

TEST_CASE("cover_corridor: narrow chord switches to boundary steps of 2") {
    auto poly = SimplePolygon::validate(rectangle(8.0, 1.9));
    auto corridors = extract_corridors(poly, medial_axis(poly), 2.5);
    REQUIRE(corridors.size() == 1);
    auto centers = cover_corridor(poly, corridors[0]);
    REQUIRE(!centers.empty());
    // Half-width 0.95: per-step chord 2*2*sqrt(1-0.9025) < 2, so every disk
    // sits on the boundary.
    for (const Point2& c : centers)
        CHECK((std::abs(c.y) < 1e-9 || std::abs(c.y - 1.9) < 1e-9));
}

TEST_CASE("large_perimeter_cover: full coverage on the fixture suite") {
    for (const auto& vs :
         {rectangle(8.0, 1.0), rectangle(8.0, 1.9), l_shape(), comb(), square(0.5)}) {
        PathEngine engine(SimplePolygon::validate(vs));
        CoverSolution sol = large_perimeter_cover(engine);
        CHECK(sol.k >= 1);
        CHECK(verify_coverage(engine, sol.centers).covered());
    }
}

TEST_CASE("large_perimeter_cover ratio trend on Wx1 rectangles") {
    double prev = 1e300;
    for (double W : {10.0, 100.0}) {
        PathEngine engine(SimplePolygon::validate(rectangle(W, 1.0)));
        CoverSolution sol = large_perimeter_cover(engine);
        REQUIRE(verify_coverage(engine, sol.centers).covered());
        PackingBound lb = packing_lower_bound(engine);
        REQUIRE(lb.count >= 1);
        double ratio = static_cast<double>(sol.k) / lb.count;
        CHECK(ratio <= prev + 1e-12);
        prev = ratio;
    }
    CHECK(prev <= 1.35);
}
