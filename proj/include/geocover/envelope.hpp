#pragma once

#include <vector>

#include "geocover/path_engine.hpp"

namespace geocover {

/// Roots of base + |anchor - e(t)| = value on [lo, hi], where e(t) lerps
/// seg_a -> seg_b. Closed-form quadratic; roots are verified before return.
std::vector<double> solve_distance_equals(Point2 anchor, double base, Point2 seg_a,
                                          Point2 seg_b, double value, double lo, double hi);

/// Roots of b1 + |a1 - e(t)| = b2 + |a2 - e(t)| on [lo, hi].
std::vector<double> solve_pieces_equal(Point2 a1, double b1, Point2 a2, double b2,
                                       Point2 seg_a, Point2 seg_b, double lo, double hi);

/// Sorted subdivision of [lo, hi] such that on each cell both the active
/// piece of every profile and the min/max-attaining profile stay fixed.
std::vector<double> envelope_subdivision(const std::vector<DistanceProfile>& profiles,
                                         double lo, double hi);

} // namespace geocover
