#pragma once

#include <string>
#include <vector>

#include "aperiodic/spectra/decay.hpp"
#include "aperiodic/symbolic/schedule.hpp"

namespace aperiodic::spectra {

enum class LengthMode { Golden, Unit };

const char* toString(LengthMode m);

enum class Trend { Zero, ToZero, BoundedAway, Inconclusive };

const char* toString(Trend t);

/// Return vectors v_m = f_{N-m} |S_{k-1}(a)| (m = 1, 2) inside the germ
/// superletter of an odd level k, where N = N(k-1).
struct ObstructionLevel {
    int kappa = 0;
    long previousN = 0;
    FieldElement v1, v2;
    CertifiedReal dist1, dist2;
    /// Golden mode: ||5 beta v_m|| evaluated directly and through the product
    /// (phi^2 + 1)(phi^(2N-m) - (-1)^(N-m) phi^m).
    CertifiedReal five1, five2, product1, product2;
    bool identityChecked = false;
    bool identityAgrees = false;
    /// Set when the level cannot host v_1, v_2; the other fields are then empty.
    std::string error;

    bool ok() const { return error.empty(); }
};

struct ObstructionReport {
    LengthMode mode = LengthMode::Golden;
    FieldElement beta;
    std::vector<ObstructionLevel> levels;
    /// Based on max(dist1, dist2) per level.
    Trend trend = Trend::Inconclusive;
    double minOfMax = 0.0;
    double minOfMin = 0.0;
};

/// Bounded away: max(dist1, dist2) stays at or above this over the later half
/// of the computed levels. Genuine eigenvalues decay like phi^-N(k-1) there.
inline constexpr double kBoundedAwayThreshold = 1e-3;

ObstructionReport obstructionScrambled(const symbolic::ScrambleSchedule& schedule, LengthMode mode,
                                       const FieldElement& beta, const std::vector<int>& kappas);

} // namespace aperiodic::spectra
