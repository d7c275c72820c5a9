#pragma once

#include <map>
#include <optional>

#include "aperiodic/geometry/patch.hpp"

namespace aperiodic::geometry {

/// New tile length as a function of the radius-R collar (2R + 1 letters
/// centred on the tile). R = 0 is a plain per-letter length change.
struct DeformationRule {
    int radius = 0;
    std::map<Word, FieldElement> table;
    /// Lengths for boundary tiles whose truncated collar the table does not settle.
    std::optional<LengthAssignment> boundary;

    static DeformationRule fromLengths(const LengthAssignment& lengths);
};

struct DeformedPatch {
    Patch patch;
    /// Collar word of each tile class; truncated collars are stored as seen.
    std::vector<Word> classCollars;
    /// Tiles whose collar ran off the word.
    std::vector<std::size_t> truncated;
};

/// Throws TotalityError naming a collar that occurs but has no length.
DeformedPatch applyDeformation(const Word& w, const DeformationRule& rule,
                               const FieldElement& anchor = FieldElement(0L));

inline constexpr double kStabilizationTolerance = 1e-6;

/// F(k) = sum over the first k tiles of (new length - old length).
struct DisplacementSeries {
    std::vector<std::uint32_t> classes;
    std::vector<FieldElement> deltas;
    std::vector<double> values;
    std::vector<double> runningSup;
    double supAbs = 0.0;
    /// Running sup moved by less than kStabilizationTolerance over the second half.
    bool stabilized = false;

    FieldElement exact(std::size_t k) const;
    double supUpTo(std::size_t k) const { return runningSup.at(k); }
};

DisplacementSeries displacementCochain(const Word& w, const LengthAssignment& before, const LengthAssignment& after);
DisplacementSeries displacementCochain(const Word& w, const LengthAssignment& before, const DeformationRule& after);

} // namespace aperiodic::geometry
