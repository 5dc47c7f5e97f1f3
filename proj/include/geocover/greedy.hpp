#pragma once

#include <utility>
#include <vector>

#include "geocover/disk.hpp"
#include "geocover/one_center.hpp"

namespace geocover {

/// One committed disk of the greedy run: it covers the boundary arc
/// [c_before, c_after] clockwise.
struct IterationRecord {
    enum class Kind { LongSegment, Augment, FinalWrap };
    enum class Branch { None, X1, X2 };

    Kind kind = Kind::Augment;
    Branch branch = Branch::None;
    BoundaryPoint c_before;
    BoundaryPoint c_after;
    Point2 center;
    int v_u = -1;              // first uncoverable vertex (Augment only)
    int subproblem_size = 0;   // |Q| of the AugmentShort subproblem
    std::vector<std::pair<int, bool>> probe_transcript;  // (vertex, TestCover)
    std::vector<double> f_roots;  // roots of F(t) = 2 on edge e (Augment only)
};

struct CoverState {
    BoundaryPoint c;
    double covered_length = 0.0;
    std::vector<Point2> centers;
    std::vector<IterationRecord> iteration_trace;
};

struct CoverSolution {
    std::vector<Point2> centers;
    int k = 0;
    long long sum_q = 0;
    int start_vertex = 0;
    std::vector<IterationRecord> trace;
};

/// Step 1 of ContiguousGreedy: when the straight remainder from c to the next
/// vertex exceeds 2, drop ceil(d/2)-1 centers on it at offsets 1, 3, 5, ...
/// and advance c by twice that count. No-op when d <= 2.
void cover_long_segment(const PathEngine& engine, CoverState& state);

/// Exponential + binary search for the smallest vertex index u (walking
/// clockwise from i) with TestCover(c, v_u) false. Probing is capped at
/// cap_vertex (the wrap target); returns -1 when everything up to the cap is
/// coverable. Probes are appended to the transcript; sum_q accumulates |Q|.
int find_first_uncoverable(const PathEngine& engine, const BoundaryPoint& c, int i,
                           int cap_vertex, std::vector<std::pair<int, bool>>* transcript,
                           long long* sum_q);

struct AugmentResult {
    BoundaryPoint c_next;   // on edge v_{u-1} -> v_u, possibly at v_{u-1}
    Point2 center;          // in A, unit disk covers dP[c, c_next]
    IterationRecord::Branch branch = IterationRecord::Branch::None;
    std::vector<double> f_roots;
};

AugmentResult augment_short(const PathEngine& engine, const BoundaryPoint& c, int u);

CoverSolution contiguous_greedy(const PathEngine& engine, int start_vertex);

} // namespace geocover
