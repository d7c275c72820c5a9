#pragma once

#include <string>
#include <vector>

#include "aperiodic/algebra/field.hpp"
#include "aperiodic/symbolic/morphism.hpp"

namespace aperiodic::geometry {

using algebra::FieldElement;
using algebra::FieldRef;
using algebra::Rational;
using symbolic::Alphabet;
using symbolic::Letter;
using symbolic::Word;

/// Tile length per letter. All lengths live in one field and are certified positive.
class LengthAssignment {
public:
    LengthAssignment() = default;
    LengthAssignment(Alphabet alphabet, std::vector<FieldElement> lengths, std::string label = "explicit");

    /// a -> phi, every other letter -> 1.
    static LengthAssignment golden(const Alphabet& alphabet);
    static LengthAssignment unit(const Alphabet& alphabet);
    /// 1 + t * xi, xi the exact eigenvector (b-component 1) of the
    /// substitution matrix for the eigenvalue with 1-based index `eigenIndex`.
    static LengthAssignment deformed(const Alphabet& alphabet, const symbolic::Morphism& sigma, int eigenIndex,
                                     const Rational& t);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<FieldElement>& lengths() const { return lengths_; }
    const FieldElement& length(Letter x) const { return lengths_.at(x); }
    double approx(Letter x) const { return approx_.at(x); }
    const std::vector<double>& approxAll() const { return approx_; }
    const FieldRef& field() const { return field_; }
    const std::string& label() const { return label_; }

    /// Sum of count * length over letters.
    FieldElement lengthOf(const std::vector<algebra::BigInt>& counts) const;

private:
    Alphabet alphabet_;
    std::vector<FieldElement> lengths_;
    std::vector<double> approx_;
    FieldRef field_;
    std::string label_;
};

/// Numeric value accurate to about 1e-15 relative.
double approxValue(const FieldElement& x);

} // namespace aperiodic::geometry
