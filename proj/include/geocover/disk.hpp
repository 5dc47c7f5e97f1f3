#pragma once

#include <vector>

#include "geocover/path_engine.hpp"

namespace geocover {

/// Circular arc of the disk boundary around an anchor: the angular interval
/// [ang0, ang1] (counterclockwise, ang1 > ang0, may pass 2*pi) of the circle
/// of radius r centered at the anchor.
struct DiskArc {
    Point2 anchor;
    double r = 1.0;
    double ang0 = 0.0;
    double ang1 = 0.0;

    Point2 point_at(double ang) const {
        return {anchor.x + r * std::cos(ang), anchor.y + r * std::sin(ang)};
    }
};

struct DiskBoundaryPiece {
    enum class Kind { Arc, Boundary };
    Kind kind = Kind::Arc;
    DiskArc arc;               // when kind == Arc
    BoundaryPoint seg0, seg1;  // when kind == Boundary: clockwise portion of dP
    bool reversed = false;     // traversal direction within the stitched loop
};

/// Explicit boundary of a geodesic unit disk: arcs around shortest-path-tree
/// anchors plus absorbed polygon-boundary portions, stitched into one loop.
struct GeodesicDisk {
    Point2 center;
    std::vector<DiskBoundaryPiece> pieces;
    bool closed = false;
};

bool disk_contains(const PathEngine& engine, Point2 center, Point2 p);

GeodesicDisk disk_boundary(const PathEngine& engine, Point2 center);

/// Flatten the disk boundary to a closed polyline (arc sagitta <= tol).
std::vector<Point2> disk_polyline(const SimplePolygon& poly, const GeodesicDisk& disk,
                                  double sagitta = 1e-3);

/// Intersection A of the unit disks around the given centers, represented
/// implicitly by membership queries.
struct IntersectionRegion {
    std::vector<Point2> centers;
};

bool region_contains(const PathEngine& engine, const IntersectionRegion& region, Point2 p);

/// A disk-disk intersection point on the boundary of A, labeled with the two
/// centers at geodesic distance exactly 1.
struct IntersectionPoint {
    Point2 p;
    Point2 center_a;
    Point2 center_b;
};

std::vector<IntersectionPoint> disk_disk_intersections(const PathEngine& engine,
                                                       const IntersectionRegion& region);

} // namespace geocover
