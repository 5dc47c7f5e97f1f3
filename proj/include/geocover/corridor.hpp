#pragma once

#include <vector>

#include "geocover/greedy.hpp"
#include "geocover/path_engine.hpp"

namespace geocover {

/// A boundary feature of the polygon: an edge, or a reflex vertex.
struct MedialFeature {
    enum class Kind { Edge, ReflexVertex };
    Kind kind = Kind::Edge;
    int index = 0;
};

double feature_distance(const SimplePolygon& poly, const MedialFeature& f, Point2 p);

/// One edge of the medial axis: the set of interior points equidistant from
/// its two closest features, either a straight segment or a parabolic arc
/// (focus = reflex vertex, directrix = edge line).
struct MedialEdge {
    enum class Geometry { Segment, Parabola };
    Geometry geometry = Geometry::Segment;
    MedialFeature f1, f2;
    Point2 p0, p1;      // endpoints
    double length = 0.0;
    int node0 = -1, node1 = -1;  // endpoint ids in the axis tree

    // Parabola frame: directrix base/tangent/inward normal plus focus; the
    // arc is parameterized by the foot coordinate x in [x0, x1].
    Point2 dir_a, dir_t, dir_n, focus;
    double x0 = 0.0, x1 = 0.0;

    /// Point at normalized parameter u in [0, 1] (arc-length for segments,
    /// foot-coordinate for parabolas).
    Point2 point_at(double u) const;
};

struct MedialAxis {
    std::vector<MedialEdge> edges;
    int node_count = 0;
};

MedialAxis medial_axis(const SimplePolygon& poly);

/// A boundary sub-segment on one polygon edge, as foot coordinates (distance
/// from the edge's start vertex) lo <= hi.
struct BoundaryPortion {
    int edge = 0;
    double lo = 0.0;
    double hi = 0.0;
};

/// A long axis edge together with the boundary it governs: the one or two
/// edge sub-segments between the closest-feature feet of the axis endpoints,
/// plus the focus vertex in the parabolic case.
struct Corridor {
    MedialEdge axis;
    std::vector<BoundaryPortion> portions;
    int focus_vertex = -1;
};

std::vector<Corridor> extract_corridors(const SimplePolygon& poly, const MedialAxis& axis,
                                        double c_threshold = 2.5);

/// Covers the corridor's boundary portions: disks marched on the axis while
/// each covers corridor boundary of total length > 2 per step, then (at most
/// one switch) step-2 disks on the boundary remainders. Parabolic corridors
/// get one disk on the focus vertex plus step-2 disks on the directrix
/// portion.
std::vector<Point2> cover_corridor(const SimplePolygon& poly, const Corridor& corridor);

/// Large-perimeter algorithm: corridor disks plus step-2 boundary disks over
/// the short portions.
CoverSolution large_perimeter_cover(const PathEngine& engine, double c_threshold = 2.5);

} // namespace geocover
