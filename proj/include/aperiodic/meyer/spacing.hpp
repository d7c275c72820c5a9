#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aperiodic/geometry/lengths.hpp"

namespace aperiodic::meyer {

using geometry::FieldElement;
using geometry::LengthAssignment;
using geometry::Word;

/// Letter-count vectors of all factors of one length, deduplicated.
/// Rows are stored flat, `dimension` entries each, in lexicographic order.
struct FactorPopulations {
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::vector<std::uint32_t> rows;

    std::size_t size() const { return dimension == 0 ? 0 : rows.size() / dimension; }
};

/// Prefix letter counts of a word, one row per vertex.
class PrefixCounts {
public:
    PrefixCounts(const Word& w, std::size_t alphabetSize);

    std::size_t wordLength() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::uint32_t at(std::size_t vertex, std::size_t letter) const { return data_[vertex * k_ + letter]; }

    /// Distinct populations of factors of length m (1 <= m <= wordLength).
    FactorPopulations factorPopulations(std::size_t m) const;

private:
    std::size_t n_, k_;
    std::vector<std::uint32_t> data_;
};

struct GapEntry {
    std::size_t scale = 0;
    /// Smallest positive difference of spacing values; zero when fewer than two values exist.
    FieldElement gap;
    double gapApprox = 0.0;
    std::size_t distinctValues = 0;
};

struct GapProfile {
    std::vector<GapEntry> entries;
};

/// Minimal positive gap among spacing values of factors of length <= n, per scale.
GapProfile gapProfile(const Word& w, const LengthAssignment& lengths, const std::vector<std::size_t>& scales);

struct SpacingCount {
    std::size_t scale = 0;
    std::size_t count = 0;
};

struct PowerFit {
    double exponent = 0.0;
    double intercept = 0.0;
    /// Root mean square residual in log space.
    double residual = 0.0;
};

/// Least squares fit of log y against log x.
PowerFit fitPowerLaw(const std::vector<double>& x, const std::vector<double>& y);

struct SpacingGrowth {
    std::vector<SpacingCount> counts;
    PowerFit fit;
    bool lengthsIndependent = true;
    std::vector<std::string> warnings;
};

/// Distinct spacing values among factors of length exactly n, per scale.
SpacingGrowth spacingGrowth(const Word& w, const LengthAssignment& lengths, const std::vector<std::size_t>& scales);

} // namespace aperiodic::meyer
