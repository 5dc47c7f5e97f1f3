#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "geocover/one_center.hpp"
#include "test_fixtures.hpp"
#include "test_oracles.hpp"

using namespace geocover;
using namespace geocover::testing;

TEST_CASE("single site") {
    PathEngine engine(SimplePolygon::validate(unit_square()));
    auto res = geodesic_center(engine, {{0.3, 0.7}});
    CHECK(res.radius == doctest::Approx(0.0));
    CHECK(dist(res.center, {0.3, 0.7}) < 1e-12);
    REQUIRE(res.determiners.size() == 1);
}

TEST_CASE("pair case: midpoint of the geodesic, radius d/2") {
    auto poly = SimplePolygon::validate(random_star(22, 13, 3.0));
    PathEngine engine(poly);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        Point2 a = random_interior_point(poly, rng);
        Point2 b = random_interior_point(poly, rng);
        auto res = geodesic_center(engine, {a, b});
        double d = engine.distance(a, b);
        CHECK(res.radius == doctest::Approx(d / 2.0).epsilon(1e-9));
        CHECK(engine.distance(res.center, a) == doctest::Approx(d / 2.0).epsilon(1e-9));
        CHECK(engine.distance(res.center, b) == doctest::Approx(d / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("pair across a reflex corner") {
    PathEngine engine(SimplePolygon::validate(l_shape()));
    Point2 a{0.2, 1.8}, b{1.8, 0.2};
    auto res = geodesic_center(engine, {a, b});
    double d = dist(a, Point2{1, 1}) + dist(Point2{1, 1}, b);
    CHECK(res.radius == doctest::Approx(d / 2.0).epsilon(1e-9));
    // The bent path is symmetric around the reflex corner, so the geodesic
    // midpoint is the corner itself.
    CHECK(dist(res.center, Point2{1, 1}) < 1e-9);
}

TEST_CASE("equilateral triple in a convex polygon: Euclidean circumcenter") {
    PathEngine engine(SimplePolygon::validate(scaled(unit_square(), 10.0)));
    double h = std::sqrt(3.0) / 2.0;
    Point2 a{4, 4}, b{5, 4}, c{4.5, 4 + h};
    auto res = geodesic_center(engine, {a, b, c});
    CHECK(res.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(dist(res.center, Point2{4.5, 4 + h / 3.0}) < 1e-8);
    CHECK(res.determiners.size() == 3);
}

TEST_CASE("random triples match the grid-refinement oracle") {
    for (auto vs : {l_shape(), random_star(16, 57, 2.5)}) {
        auto poly = SimplePolygon::validate(vs);
        PathEngine engine(poly);
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Point2> sites{random_interior_point(poly, rng),
                                      random_interior_point(poly, rng),
                                      random_interior_point(poly, rng)};
            auto res = geodesic_center(engine, sites);
            auto [op, orr] = grid_minimax(engine, sites);
            CHECK(res.radius == doctest::Approx(orr).epsilon(1e-6));
            CHECK(res.radius <= orr + 1e-7);  // ours may only be better
        }
    }
}

TEST_CASE("many sites: radius equals oracle and covers all sites") {
    auto poly = SimplePolygon::validate(random_star(20, 71, 2.0));
    PathEngine engine(poly);
    std::mt19937_64 rng(5);
    std::vector<Point2> sites;
    for (int i = 0; i < 9; ++i) sites.push_back(random_interior_point(poly, rng));
    auto res = geodesic_center(engine, sites);
    for (const Point2& s : sites) CHECK(engine.distance(res.center, s) <= res.radius + 1e-9);
    auto [op, orr] = grid_minimax(engine, sites);
    CHECK(res.radius == doctest::Approx(orr).epsilon(1e-6));
    CHECK(!res.determiners.empty());
    for (const Point2& s : res.determiners)
        CHECK(engine.distance(res.center, s) == doctest::Approx(res.radius).epsilon(1e-8));
}

TEST_CASE("cover_sites enumerates c plus vertices clockwise through v") {
    auto poly = SimplePolygon::validate(unit_square());
    auto c = poly.boundary_point(0, 0.5);  // on edge v0->v1
    auto sites = cover_sites(poly, c, 3);
    REQUIRE(sites.size() == 4);  // c, v1, v2, v3
    CHECK(dist(sites[0], Point2{0, 0.5}) < 1e-12);
    CHECK(sites[1] == poly.vertex(1));
    CHECK(sites[3] == poly.vertex(3));

    // c exactly at a vertex: not duplicated.
    auto cv = poly.boundary_point(1, 0.0);
    auto sv = cover_sites(poly, cv, 2);
    REQUIRE(sv.size() == 2);  // v1 (=c), v2
}

TEST_CASE("test_cover examples") {
    // Small square: everything fits in one disk.
    PathEngine small(SimplePolygon::validate(square(0.5)));
    auto c0 = small.polygon().vertex_boundary_point(0);
    auto det = test_cover_detail(small, c0, 2);
    CHECK(det.ok);
    CHECK(det.center.radius == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-9));

    // Long thin rectangle: far corner out of reach.
    PathEngine thin(SimplePolygon::validate(rectangle(8.0, 0.1)));
    auto& tp = thin.polygon();
    int far = -1, near = -1;
    for (int i = 0; i < 4; ++i) {
        if (dist(tp.vertex(i), Point2{8, 0.1}) < 1e-12) far = i;
        if (dist(tp.vertex(i), Point2{0, 0.1}) < 1e-12) near = i;
    }
    REQUIRE(far >= 0);
    int cv = -1;
    for (int i = 0; i < 4; ++i)
        if (dist(tp.vertex(i), Point2{0, 0}) < 1e-12) cv = i;
    CHECK_FALSE(test_cover(thin, tp.vertex_boundary_point(cv), far));
    CHECK(test_cover(thin, tp.vertex_boundary_point(cv), near));
}

TEST_CASE("test_cover monotone in the sweep") {
    auto poly = SimplePolygon::validate(scaled(l_shape(), 2.0));
    PathEngine engine(poly);
    auto c = poly.boundary_point(0, 0.25);
    bool seen_false = false;
    for (int step = 1; step <= poly.size(); ++step) {
        bool ok = test_cover(engine, c, poly.index(c.edge_index + step));
        if (seen_false) CHECK_FALSE(ok);
        if (!ok) seen_false = true;
    }
    CHECK(seen_false);  // scaled L-shape is not unit-coverable
}
