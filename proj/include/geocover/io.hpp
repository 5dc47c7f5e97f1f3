#pragma once

#include <string>
#include <vector>

#include "geocover/path_engine.hpp"
#include "geocover/verify.hpp"

namespace geocover {

/// Parsed input. All solving happens on `polygon`, which is the input scaled
/// by 1/radius so disks are unit; outputs are scaled back.
struct ProblemInstance {
    std::vector<Point2> raw_vertices;
    double radius = 1.0;
    SimplePolygon polygon;
};

/// Parses {"vertices": [[x, y], ...], "radius": number?}. Throws
/// std::runtime_error on malformed documents and ValidationError on bad
/// polygons.
ProblemInstance parse_instance(const std::string& text);

std::string emit_instance(const ProblemInstance& inst);

/// {"centers", "count", "sum_q", "verified", "gaps"} in input units, stable
/// key order. `report` may be null (then verified = false, gaps = []).
std::string emit_solution_json(const ProblemInstance& inst, const std::vector<Point2>& centers,
                               long long sum_q, const CoverageReport* report);

/// SVG render: polygon outline, disk boundaries flattened at 1e-3 sagitta,
/// centers as dots. Input units.
std::string emit_solution_svg(const ProblemInstance& inst, const PathEngine& engine,
                              const std::vector<Point2>& centers);

enum class ShapeClass { Star, Walk, Corridor };

/// Deterministic-for-seed simple polygon with about n vertices. Star:
/// radial perturbation; Walk: jittered regular polygon with repair;
/// Corridor: comb with long thin teeth (large perimeter-to-n ratio).
std::vector<Point2> generate_random_polygon(int n, unsigned seed, ShapeClass shape);

} // namespace geocover
