#pragma once

#include <string>
#include <vector>

#include "aperiodic/algebra/field.hpp"

namespace aperiodic::spectra {

using algebra::CertifiedReal;
using algebra::FieldElement;
using algebra::Rational;

struct Candidate {
    FieldElement beta;
    std::string label;
};

/// (a + b phi) / sqrt 5 for |a|, |b| <= height; zero included, ordered by (a, b).
std::vector<Candidate> goldenHeightCandidates(int height);
/// a + b phi for |a|, |b| <= height; zero included, ordered by (a, b).
std::vector<Candidate> goldenIntegerCandidates(int height);
std::vector<Candidate> integerCandidates(long lo, long hi);

struct PhiPowerDecay {
    /// ||beta phi^n|| for n = 0..nMax.
    std::vector<CertifiedReal> forward;
    /// ||beta phi^-n|| for n = 0..nMax.
    std::vector<CertifiedReal> backward;
    /// Forward values shrink by a factor phi per step over the second half (or vanish).
    bool forwardGeometric = false;
    bool backwardGeometric = false;
};

PhiPowerDecay phiPowerDecay(const FieldElement& beta, int nMax);

/// True when every consecutive ratio in the second half of `values` is within
/// `tolerance` of `ratio`, or the tail is identically zero.
bool geometricTail(const std::vector<double>& values, double ratio, double tolerance = 1e-3);

} // namespace aperiodic::spectra
