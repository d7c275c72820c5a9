#pragma once

#include <vector>

#include "aperiodic/algebra/field.hpp"
#include "aperiodic/algebra/polynomial.hpp"

namespace aperiodic::algebra {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves m x = rhs for square, nonsingular m. Throws DegeneracyError if singular.
std::vector<Rational> solveLinear(RationalMatrix m, std::vector<Rational> rhs);

/// Rank over Q.
int rankOf(RationalMatrix m);

/// Square non-negative integer matrix, row-major. Entry (i, j) counts the
/// occurrences of letter j in the image of letter i (row i is a population).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static IntMatrix fromRows(const std::vector<std::vector<long>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

/// det(xI - M), monic with integer coefficients.
Polynomial characteristicPolynomial(const IntMatrix& m);

struct Eigenvalue {
    /// Minimal polynomial (primitive integer form) of the eigenvalue.
    Polynomial minimalPolynomial;
    Rational lo, hi;
    int multiplicity = 1;
    /// Null when the minimal polynomial has degree above 3.
    FieldRef field;
    bool numericOnly = false;
    double approx = 0.0;
};

/// Real eigenvalues in descending order, each isolated in a rational interval.
std::vector<Eigenvalue> isolateEigenvalues(const IntMatrix& m);

struct Eigenvector {
    std::vector<FieldElement> components;
    /// Eigenspace of dimension > 1; the returned vector is one canonical basis element.
    bool degenerate = false;
};

/// Right eigenvector for the eigenvalue with 1-based index `which` in the
/// descending order of isolateEigenvalues. Normalized so component
/// `normalizeAt` equals 1 whenever that component is nonzero.
Eigenvector eigenvectorExact(const IntMatrix& m, int which, std::size_t normalizeAt = 1);

/// (M - lambda I) v computed exactly.
std::vector<FieldElement> eigenResidual(const IntMatrix& m, const FieldElement& lambda,
                                        const std::vector<FieldElement>& v);

/// True when the values are linearly independent over Q.
bool rationalIndependence(const std::vector<FieldElement>& values);

} // namespace aperiodic::algebra
