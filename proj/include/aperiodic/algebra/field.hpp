#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aperiodic/algebra/number.hpp"
#include "aperiodic/algebra/polynomial.hpp"

namespace aperiodic::algebra {

/// A real number field Q(theta) of degree 1..3, given by the integer minimal
/// polynomial of theta and a rational interval isolating the chosen real root.
///
/// Descriptors are shared through `FieldRef`; the only mutable state is the
/// memo of the tightest root enclosure computed so far, guarded by a mutex.
class FieldDescriptor {
public:
    /// Validates degree, irreducibility and root isolation. Throws ConstraintError.
    static std::shared_ptr<const FieldDescriptor> create(std::vector<BigInt> minpoly,
                                                         Rational rootLo, Rational rootHi);

    static const std::shared_ptr<const FieldDescriptor>& rationals();
    /// Q(phi), phi the positive root of x^2 - x - 1.
    static const std::shared_ptr<const FieldDescriptor>& golden();

    int degree() const { return degree_; }
    const std::vector<BigInt>& minpoly() const { return minpoly_; }
    const Polynomial& minimalPolynomial() const { return poly_; }
    const Rational& rootLo() const { return lo_; }
    const Rational& rootHi() const { return hi_; }

    /// Enclosure [lo, hi] of the root with hi - lo <= width.
    std::pair<Rational, Rational> rootEnclosure(const Rational& width) const;

    /// Same polynomial and same selected root.
    bool sameField(const FieldDescriptor& other) const;

    FieldDescriptor(std::vector<BigInt> minpoly, Rational lo, Rational hi);

private:
    int degree_;
    std::vector<BigInt> minpoly_;
    Polynomial poly_;
    Rational lo_, hi_;
    mutable std::mutex cacheMutex_;
    mutable Rational cacheLo_, cacheHi_;
};

using FieldRef = std::shared_ptr<const FieldDescriptor>;

class CertifiedReal;

/// Exact element of a FieldDescriptor's field in the power basis
/// {1, theta, ..., theta^(d-1)}. Immutable value type; arithmetic never rounds.
///
/// Elements of Q (degree-1 field, or any element whose non-constant
/// coefficients vanish) combine with elements of any field.
class FieldElement {
public:
    FieldElement();
    FieldElement(FieldRef field, std::vector<Rational> coeffs);
    FieldElement(FieldRef field, const Rational& q);
    explicit FieldElement(const Rational& q);
    FieldElement(long q);

    static FieldElement generator(const FieldRef& field);
    /// phi^n in Q(phi), n may be negative.
    static FieldElement goldenPower(long n);
    static FieldElement sqrt5();

    const FieldRef& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return field_->degree(); }

    bool isZero() const;
    bool isRational() const;
    Rational rationalValue() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement inverse() const;
    FieldElement pow(long n) const;
    /// Galois conjugate; quadratic fields only.
    FieldElement conjugate() const;
    /// Field trace (sum of all conjugates).
    Rational trace() const;

    /// -1, 0 or +1; exact zero detection, then enclosure refinement.
    int sign() const;
    double toDouble() const;
    CertifiedReal embed(const Rational& accuracy) const;

    /// Rewrites this element into `target` (must be the same field or this
    /// element must be rational). Throws DomainError otherwise.
    FieldElement in(const FieldRef& target) const;

    /// Coefficient vector rendered as "p/q" strings; used for ordering keys.
    std::string key() const;
    std::string toString() const;

private:
    FieldRef field_;
    std::vector<Rational> c_;
};

bool operator<(const FieldElement& a, const FieldElement& b);

/// Common field of two elements after promoting rationals.
FieldRef commonField(const FieldElement& a, const FieldElement& b);

/// Rigorous enclosure [lo, hi] of a real number.
class CertifiedReal {
public:
    CertifiedReal() = default;
    CertifiedReal(Rational lo, Rational hi, Rational accuracy);
    static CertifiedReal exact(const Rational& q);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    const Rational& accuracy() const { return accuracy_; }
    bool isPoint() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    double toDouble() const { return mid().get_d(); }
    /// Midpoint printed with as many digits as the accuracy supports.
    std::string decimal() const;
    int decimalDigits() const;

private:
    Rational lo_, hi_, accuracy_;
};

inline const Rational kDefaultAccuracy = Rational(BigInt(1), BigInt("1000000000000"));

CertifiedReal embed(const FieldElement& x, const Rational& accuracy = kDefaultAccuracy);

/// Distance to the nearest integer with a flag for enclosures that touch a
/// half-integer (both candidate distances are then within tolerance of 1/2).
struct FracDist {
    CertifiedReal value;
    bool halfAmbiguous = false;
    bool viaConjugate = false;
};

/// ||x||. Quadratic elements go through the conjugate route
/// ||x|| = ||trace(x) - conj(x)||; everything else through direct evaluation.
FracDist fracDist(const FieldElement& x, const Rational& accuracy = kDefaultAccuracy);
FracDist fracDistDirect(const FieldElement& x, const Rational& accuracy = kDefaultAccuracy);
FracDist fracDistConjugate(const FieldElement& x, const Rational& accuracy = kDefaultAccuracy);

} // namespace aperiodic::algebra
