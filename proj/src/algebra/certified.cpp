#include <algorithm>

#include "aperiodic/algebra/field.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic::algebra {

CertifiedReal::CertifiedReal(Rational lo, Rational hi, Rational accuracy)
    : lo_(std::move(lo)), hi_(std::move(hi)), accuracy_(std::move(accuracy))
{
    if (lo_ > hi_)
        throw DomainError("inverted enclosure");
}

CertifiedReal CertifiedReal::exact(const Rational& q)
{
    return CertifiedReal(q, q, Rational(0));
}

int CertifiedReal::decimalDigits() const
{
    if (accuracy_ <= 0)
        return 15;
    int k = 0;
    Rational step(1);
    while (step > accuracy_ && k < 200) {
        step /= 10;
        ++k;
    }
    return k;
}

std::string CertifiedReal::decimal() const
{
    return toDecimal(mid(), decimalDigits());
}

namespace {

Rational dyadicFloor(const Rational& x, unsigned long k)
{
    BigInt scale = BigInt(1) << k;
    return Rational(floorOf(x * scale), scale);
}

Rational dyadicCeil(const Rational& x, unsigned long k)
{
    BigInt scale = BigInt(1) << k;
    return Rational(ceilOf(x * scale), scale);
}

FracDist distanceFromEnclosure(const Rational& lo, const Rational& hi, const Rational& accuracy)
{
    Rational m = (lo + hi) / 2;
    Rational h = (hi - lo) / 2;
    Rational d = absOf(m - Rational(nearestInteger(m)));
    Rational half(1, 2);
    Rational dlo = std::max(Rational(0), Rational(d - h));
    Rational dhi = std::min(half, Rational(d + h));
    Rational halfPoint = Rational(floorOf(m)) + half;
    FracDist out;
    out.value = CertifiedReal(dlo, dhi, accuracy);
    out.halfAmbiguous = lo <= halfPoint && halfPoint <= hi;
    return out;
}

} // namespace

CertifiedReal embed(const FieldElement& x, const Rational& accuracy)
{
    if (accuracy <= 0)
        throw DomainError("accuracy must be positive");
    const auto& c = x.coeffs();
    if (x.isRational())
        return CertifiedReal(c[0], c[0], accuracy);

    const FieldDescriptor& f = *x.field();
    Rational bound = std::max(absOf(f.rootLo()), absOf(f.rootHi()));
    // Lipschitz constant of the coefficient polynomial on the isolating interval.
    Rational lip = 0;
    Rational power = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
        lip += absOf(c[i]) * static_cast<long>(i) * power;
        power *= bound;
    }
    Rational width = accuracy / (4 * lip + 4);
    auto [rl, rh] = f.rootEnclosure(width);

    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * rl + *it;
    Rational err = lip * (rh - rl);
    unsigned long k = dyadicExponentBelow(accuracy / 4);
    return CertifiedReal(dyadicFloor(v - err, k), dyadicCeil(v + err, k), accuracy);
}

FracDist fracDistDirect(const FieldElement& x, const Rational& accuracy)
{
    CertifiedReal e = embed(x, accuracy / 2);
    return distanceFromEnclosure(e.lo(), e.hi(), accuracy);
}

FracDist fracDistConjugate(const FieldElement& x, const Rational& accuracy)
{
    if (x.degree() != 2)
        return fracDistDirect(x, accuracy);
    Rational t = x.trace();
    CertifiedReal e = embed(x.conjugate(), accuracy / 2);
    FracDist out = distanceFromEnclosure(t - e.hi(), t - e.lo(), accuracy);
    out.viaConjugate = true;
    return out;
}

FracDist fracDist(const FieldElement& x, const Rational& accuracy)
{
    if (x.degree() == 2)
        return fracDistConjugate(x, accuracy);
    return fracDistDirect(x, accuracy);
}

} // namespace aperiodic::algebra
