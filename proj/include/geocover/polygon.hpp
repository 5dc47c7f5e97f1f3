#pragma once

#include <cstddef>
#include <vector>

#include "geocover/geometry.hpp"

namespace geocover {

class SimplePolygon;

/// A point on the polygon boundary, addressed both by (edge, local t) and by
/// its arc-length position s measured clockwise from vertex 0.
struct BoundaryPoint {
    int edge_index = 0;   // edge from vertex i to vertex i+1 (mod n)
    double t = 0.0;       // parameter in [0, 1] along the directed edge
    double s = 0.0;       // cached arc length in [0, L)

    Point2 position(const SimplePolygon& poly) const;
};

struct BoundaryArc {
    BoundaryPoint start;
    BoundaryPoint end;
    double length = 0.0;  // clockwise from start to end, wrapping allowed
};

/// Validated simple polygon stored in clockwise vertex order with a boundary
/// arc-length parameterization. Immutable after construction.
class SimplePolygon {
public:
    static SimplePolygon validate(const std::vector<Point2>& raw_vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    Point2 vertex(int i) const { return vertices_[index(i)]; }
    int index(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    double edge_length(int i) const { return edge_lengths_[index(i)]; }
    /// Arc length of vertex i from vertex 0.
    double vertex_arclength(int i) const { return cumulative_[index(i)]; }
    double perimeter() const { return perimeter_; }

    BoundaryPoint boundary_point(int edge_index, double t) const;
    BoundaryPoint point_at_arclength(double s) const;
    BoundaryPoint vertex_boundary_point(int i) const { return boundary_point(index(i), 0.0); }

    /// Clockwise arc length from u to v (0 when u == v).
    double arc_length(const BoundaryPoint& u, const BoundaryPoint& v) const;
    BoundaryArc boundary_arc(const BoundaryPoint& u, const BoundaryPoint& v) const;

    bool reflex(int i) const { return reflex_[index(i)]; }

    /// Boundary counts as inside.
    bool contains(Point2 p) const;
    bool strictly_contains(Point2 p) const;
    bool on_boundary(Point2 p) const;

    /// True iff the closed segment ab lies entirely inside the polygon
    /// (grazing a reflex vertex or running along the boundary counts).
    bool segment_inside(Point2 a, Point2 b) const;

private:
    SimplePolygon() = default;
    void finalize();

    std::vector<Point2> vertices_;
    std::vector<double> edge_lengths_;
    std::vector<double> cumulative_;
    std::vector<bool> reflex_;
    double perimeter_ = 0.0;
};

} // namespace geocover
