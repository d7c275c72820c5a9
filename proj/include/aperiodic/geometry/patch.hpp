#pragma once

#include <cstdint>
#include <vector>

#include "aperiodic/geometry/lengths.hpp"

namespace aperiodic::geometry {

/// A finite 1-D tiling: a word whose k-th tile has the length of its class.
/// Vertex k sits at anchor + sum of the first k tile lengths. Plain suspension
/// uses letters as classes; deformations use collar classes.
class Patch {
public:
    Patch(Word word, std::vector<std::uint32_t> classes, std::vector<FieldElement> classLengths,
          FieldElement anchor);

    std::size_t tileCount() const { return word_.size(); }
    std::size_t vertexCount() const { return word_.size() + 1; }
    const Word& word() const { return word_; }
    const std::vector<std::uint32_t>& classes() const { return classes_; }
    const std::vector<FieldElement>& classLengths() const { return classLengths_; }
    const std::vector<double>& classApprox() const { return classApprox_; }
    const FieldElement& anchor() const { return anchor_; }
    const FieldRef& field() const { return field_; }

    /// Exact vertex position.
    FieldElement position(std::size_t k) const;
    double approxPosition(std::size_t k) const { return approx_[k]; }
    const std::vector<double>& approxPositions() const { return approx_; }

    /// Tiles of each class in [i, j).
    std::vector<std::uint64_t> classCounts(std::size_t i, std::size_t j) const;
    /// position(j) - position(i), exact.
    FieldElement difference(std::size_t i, std::size_t j) const;
    FieldElement fromCounts(const std::vector<std::uint64_t>& counts) const;
    FieldElement totalLength() const { return difference(0, tileCount()); }

private:
    static constexpr std::size_t kStride = 4096;

    Word word_;
    std::vector<std::uint32_t> classes_;
    std::vector<FieldElement> classLengths_;
    std::vector<double> classApprox_;
    FieldElement anchor_;
    FieldRef field_;
    std::vector<double> approx_;
    // Class counts of the prefix of length m * kStride.
    std::vector<std::vector<std::uint64_t>> checkpoints_;
};

Patch suspend(const Word& w, const LengthAssignment& lengths, const FieldElement& anchor = FieldElement(0L));

/// Distinct positive vertex differences not exceeding `window`, sorted.
std::vector<FieldElement> differenceSet(const Patch& p, const FieldElement& window);

/// Strict ordering that only falls back to exact comparison when the
/// numeric values are too close to call.
bool lessExact(const FieldElement& a, double av, const FieldElement& b, double bv);

} // namespace aperiodic::geometry
