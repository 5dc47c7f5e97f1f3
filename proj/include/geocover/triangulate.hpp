#pragma once

#include <array>
#include <vector>

#include "geocover/polygon.hpp"

namespace geocover {

/// Ear-clipping triangulation of a simple polygon plus the dual tree over
/// triangles (adjacency across shared diagonals).
struct Triangulation {
    std::vector<std::array<int, 3>> triangles;          // polygon vertex indices
    std::vector<std::vector<int>> dual_adjacency;       // per-triangle neighbor list

    /// Index of a triangle containing p (boundary inclusive), or -1.
    int locate(const SimplePolygon& poly, Point2 p) const;
};

Triangulation triangulate(const SimplePolygon& poly);

} // namespace geocover
