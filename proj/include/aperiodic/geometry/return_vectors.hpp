#pragma once

#include <vector>

#include "aperiodic/geometry/lengths.hpp"
#include "aperiodic/symbolic/fusion.hpp"

namespace aperiodic::geometry {

struct ReturnVector {
    FieldElement value;
    double approx = 0.0;
    /// Level of the two superletters.
    int order = 0;
    /// Level of the superletter they were found in.
    int ambient = 0;
    Letter type = 0;
};

struct ReturnVectorSet {
    std::vector<ReturnVector> vectors;
    /// Ambient superletters were too long; only consecutive-block vectors
    /// derived symbolically are listed.
    bool symbolicFallback = false;
    std::size_t partsExamined = 0;
};

inline constexpr std::size_t kReturnVectorPartBudget = 5000;

/// Length of S_n(x) under the given tile lengths, from its population.
FieldElement superletterLength(const symbolic::FusionRule& f, const LengthAssignment& lengths, int level, Letter x);

/// Differences between occurrences of same-type level-n superletters inside
/// each level-`ambient` superletter. Works on the sequence of level-n types
/// and never expands letters. Sorted by value, exact duplicates removed.
ReturnVectorSet returnVectors(const symbolic::FusionRule& f, const LengthAssignment& lengths, int n, int ambient,
                              std::size_t partBudget = kReturnVectorPartBudget);

/// Level-n type sequence of S_ambient(x). Throws BudgetError beyond `budget` parts.
Word typeSequence(const symbolic::FusionRule& f, int n, int ambient, Letter x, std::size_t budget);

} // namespace aperiodic::geometry
