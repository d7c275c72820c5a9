#include "aperiodic/spectra/decay.hpp"

#include <cmath>

#include "aperiodic/error.hpp"

namespace aperiodic::spectra {

namespace {

std::string goldenLabel(long a, long b)
{
    if (b == 0)
        return std::to_string(a);
    std::string s = a == 0 ? "" : std::to_string(a) + (b > 0 ? "+" : "-");
    if (a == 0 && b < 0)
        s += "-";
    long mag = b < 0 ? -b : b;
    s += (mag == 1 ? "" : std::to_string(mag)) + "phi";
    return s;
}

FieldElement goldenInteger(long a, long b)
{
    return FieldElement(algebra::FieldDescriptor::golden(), std::vector<Rational>{Rational(a), Rational(b)});
}

// Tight enough for values near phi^-nMax.
Rational decayAccuracy(int nMax)
{
    return Rational(algebra::BigInt(1), algebra::BigInt(1) << (40 + nMax));
}

} // namespace

std::vector<Candidate> goldenHeightCandidates(int height)
{
    std::vector<Candidate> out;
    const FieldElement root5 = FieldElement::sqrt5();
    for (long a = -height; a <= height; ++a)
        for (long b = -height; b <= height; ++b) {
            std::string num = goldenLabel(a, b);
            out.push_back({goldenInteger(a, b) / root5, "(" + num + ")/sqrt5"});
        }
    return out;
}

std::vector<Candidate> goldenIntegerCandidates(int height)
{
    std::vector<Candidate> out;
    for (long a = -height; a <= height; ++a)
        for (long b = -height; b <= height; ++b)
            out.push_back({goldenInteger(a, b), goldenLabel(a, b)});
    return out;
}

std::vector<Candidate> integerCandidates(long lo, long hi)
{
    std::vector<Candidate> out;
    for (long m = lo; m <= hi; ++m)
        out.push_back({FieldElement(m), std::to_string(m)});
    return out;
}

bool geometricTail(const std::vector<double>& values, double ratio, double tolerance)
{
    if (values.size() < 4)
        return false;
    std::size_t start = values.size() / 2;
    bool allZero = true;
    for (std::size_t i = start; i < values.size(); ++i)
        allZero = allZero && values[i] == 0.0;
    if (allZero)
        return true;
    for (std::size_t i = start; i + 1 < values.size(); ++i) {
        if (values[i] == 0.0)
            return false;
        if (std::fabs(values[i + 1] / values[i] - ratio) > tolerance)
            return false;
    }
    return true;
}

PhiPowerDecay phiPowerDecay(const FieldElement& beta, int nMax)
{
    if (nMax < 0)
        throw DomainError("nMax must be >= 0");
    const auto& golden = algebra::FieldDescriptor::golden();
    FieldElement b = beta.in(golden);
    const Rational acc = decayAccuracy(nMax);
    PhiPowerDecay out;
    std::vector<double> fwd, bwd;
    for (long n = 0; n <= nMax; ++n) {
        out.forward.push_back(algebra::fracDist(b * FieldElement::goldenPower(n), acc).value);
        out.backward.push_back(algebra::fracDist(b * FieldElement::goldenPower(-n), acc).value);
        fwd.push_back(out.forward.back().toDouble());
        bwd.push_back(out.backward.back().toDouble());
    }
    const double inv = 2.0 / (1.0 + std::sqrt(5.0));
    out.forwardGeometric = geometricTail(fwd, inv);
    out.backwardGeometric = geometricTail(bwd, inv);
    return out;
}

} // namespace aperiodic::spectra
