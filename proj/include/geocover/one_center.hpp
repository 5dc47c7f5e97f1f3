#pragma once

#include <vector>

#include "geocover/path_engine.hpp"

namespace geocover {

/// Minimax point of a finite site set under the geodesic metric.
struct CenterResult {
    Point2 center;
    double radius = 0.0;
    std::vector<Point2> determiners;  // <= 3 sites realizing the radius
};

CenterResult geodesic_center(const PathEngine& engine, const std::vector<Point2>& sites);

/// U(c, v): the point c plus every polygon vertex strictly clockwise after c
/// up to and including vertex v.
std::vector<Point2> cover_sites(const SimplePolygon& poly, const BoundaryPoint& c, int v);

struct TestCoverResult {
    bool ok = false;
    CenterResult center;
    int site_count = 0;
};

/// TestCover predicate: can one unit disk cover c and all vertices clockwise
/// through v? Returns the 1-center so callers can reuse it as a disk center.
TestCoverResult test_cover_detail(const PathEngine& engine, const BoundaryPoint& c, int v);
bool test_cover(const PathEngine& engine, const BoundaryPoint& c, int v);

} // namespace geocover
