#pragma once

#include <optional>
#include <vector>

#include "geocover/path_engine.hpp"
#include "geocover/polygon.hpp"

namespace geocover {

struct CoverSolution;  // greedy.hpp

struct CoverageGap {
    BoundaryPoint start;
    BoundaryPoint end;
    double max_excess = 0.0;  // worst min-distance minus 1 inside the gap
};

struct CoverageReport {
    std::vector<CoverageGap> gaps;
    double max_uncovered_excess = 0.0;

    bool covered() const { return gaps.empty(); }
};

/// Visibility-graph Dijkstra geodesic distance. Independent of the funnel
/// engine; used as the ground-truth oracle in tests.
double brute_force_distance(const SimplePolygon& poly, Point2 u, Point2 v);

/// Exact coverage check: per boundary edge, the min-over-centers distance
/// envelope is analyzed piecewise; sub-intervals exceeding 1 + tol are gaps.
CoverageReport verify_coverage(const PathEngine& engine, const std::vector<Point2>& centers,
                               double tol = 1e-7);

struct PackingBound {
    int count = 0;
    std::vector<Point2> points;  // pairwise geodesic distance > 2
};

/// Greedy farthest-marching along the boundary; the resulting point count is
/// a lower bound on the optimal number of covering unit disks.
PackingBound packing_lower_bound(const PathEngine& engine, double march_step = 0.05);

struct BruteForceOptions {
    double center_grid_res = 0.05;
    double boundary_sample_res = 0.02;
    int k_max = 6;
};

struct OptResult {
    int count = 0;
    std::vector<Point2> centers;
};

/// Branch-and-bound set cover over a candidate-center grid; the result is a
/// certified covering, hence an upper bound on OPT. Returns nullopt when no
/// cover with at most k_max disks exists among the candidates.
std::optional<OptResult> brute_force_opt(const PathEngine& engine, const BruteForceOptions& opts);

/// Checks the per-iteration maximality of a greedy run (see greedy.hpp).
bool maximality_check(const PathEngine& engine, const CoverSolution& solution,
                      double delta = 1e-4);

} // namespace geocover
