#pragma once

#include <unordered_map>
#include <vector>

#include "geocover/polygon.hpp"
#include "geocover/triangulate.hpp"

namespace geocover {

/// Polyline realization of the geodesic pi(u, v); interior vertices are
/// reflex polygon vertices.
struct GeodesicPath {
    std::vector<Point2> points;
    double length = 0.0;
};

struct ShortestPathTree {
    Point2 source;
    std::vector<int> parent;     // predecessor vertex index, -1 when it is the source
    std::vector<double> dist;    // geodesic distance source -> vertex
};

/// Piecewise representation of t -> d(source, e(t)) along a directed segment:
/// on [t0, t1] the distance equals base + |anchor - e(t)|.
struct ProfilePiece {
    double t0 = 0.0;
    double t1 = 1.0;
    Point2 anchor;
    double base = 0.0;
};

struct DistanceProfile {
    Point2 seg_a;
    Point2 seg_b;
    std::vector<ProfilePiece> pieces;

    Point2 at(double t) const { return lerp(seg_a, seg_b, t); }
    double eval(double t) const;
    const ProfilePiece& piece_at(double t) const;
};

/// Geodesic shortest-path engine for one polygon: triangulation sleeve plus
/// funnel. Queries are pure; the distance cache is internal.
class PathEngine {
public:
    explicit PathEngine(SimplePolygon poly);

    const SimplePolygon& polygon() const { return poly_; }
    const Triangulation& triangulation() const { return tri_; }

    GeodesicPath shortest_path(Point2 u, Point2 v) const;
    double distance(Point2 u, Point2 v) const;
    ShortestPathTree shortest_path_tree(Point2 source) const;
    DistanceProfile distance_profile(Point2 source, Point2 seg_a, Point2 seg_b) const;

    /// Point on pi(u, v) at the given length from u (clamped to path length).
    Point2 point_along_path(const GeodesicPath& path, double length_from_start) const;

private:
    int locate_or_throw(Point2 p) const;

    SimplePolygon poly_;
    Triangulation tri_;
    std::unordered_map<long long, int> vertex_triangle_;

    struct PairKey {
        double ax, ay, bx, by;
        bool operator==(const PairKey& o) const {
            return ax == o.ax && ay == o.ay && bx == o.bx && by == o.by;
        }
    };
    struct PairKeyHash {
        size_t operator()(const PairKey& k) const;
    };
    mutable std::unordered_map<PairKey, double, PairKeyHash> dist_cache_;
};

} // namespace geocover
