#pragma once

#include <string>
#include <vector>

#include "aperiodic/algebra/number.hpp"

namespace aperiodic::algebra {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial fromIntegers(const std::vector<BigInt>& coeffs);
    static Polynomial monomial(int degree, Rational c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws DomainError on a zero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;
    /// Scales to integer coefficients with content 1 and positive leading term.
    std::vector<BigInt> primitiveIntegers() const;

    /// Human form such as "x^3 - 5x^2 + 6x - 1".
    std::string toString() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Sturm chain of a squarefree polynomial.
std::vector<Polynomial> sturmChain(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int countRootsIn(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi);

/// All rational roots of an integer polynomial (rational root test).
std::vector<Rational> rationalRoots(const Polynomial& p);

/// Cauchy bound: every root has absolute value below the result.
Rational rootBound(const Polynomial& p);

} // namespace aperiodic::algebra
