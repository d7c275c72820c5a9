#pragma once

#include <vector>

#include "aperiodic/geometry/patch.hpp"

namespace aperiodic::meyer {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Frequencies beta in [0, B] with |1 - exp(2 pi i beta a)| < eps at every vertex a.
struct EpsDualReport {
    double epsilon = 0.0;
    double window = 0.0;
    std::vector<Interval> intervals;
    /// Largest distance between consecutive interval midpoints, window edges included.
    double maxGap = 0.0;
    /// Patch had at most one vertex; the whole window is returned.
    bool degenerate = false;
    /// Vertex positions are known to about this absolute accuracy.
    double accuracy = 0.0;

    bool contains(double beta) const;
};

/// Half-width of the admissible band around each integer, in turns.
double admissibleHalfWidth(double epsilon);

EpsDualReport epsDual(const std::vector<double>& points, double epsilon, double window);
EpsDualReport epsDual(const geometry::Patch& p, double epsilon, double window);

/// Grid check: max over points of |1 - exp(2 pi i beta a)|.
double worstPhase(const std::vector<double>& points, double beta);

} // namespace aperiodic::meyer
