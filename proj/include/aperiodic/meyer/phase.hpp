#pragma once

#include <vector>

#include "aperiodic/geometry/patch.hpp"

namespace aperiodic::meyer {

using geometry::FieldElement;
using geometry::Word;

struct CollarClass {
    /// The 2R letters around the vertex (R on each side).
    Word collar;
    std::size_t vertices = 0;
    /// Chordal diameter of the phases on the unit circle, in [0, 2].
    double diameter = 0.0;
};

struct PhaseDefectReport {
    int radius = 0;
    std::vector<CollarClass> classes;
    std::size_t worstClass = 0;
    double worstDiameter = 0.0;
    /// No collar class was seen twice.
    bool degenerate = false;
};

/// Fractional part of beta * (x_k - x_0) for every vertex k, in turns.
std::vector<long double> phaseTurns(const geometry::Patch& p, const FieldElement& beta);

/// Chordal diameter of points on the circle given in turns.
double chordalDiameter(std::vector<long double> turns);

/// Groups interior vertices by radius-R collar and measures how far the phase
/// exp(2 pi i beta (x - x_0)) spreads inside each group.
PhaseDefectReport phaseDefect(const geometry::Patch& p, const FieldElement& beta, int radius);

} // namespace aperiodic::meyer
