#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aperiodic/geometry/return_vectors.hpp"
#include "aperiodic/spectra/obstruction.hpp"

namespace aperiodic::spectra {

struct CriterionLevel {
    int order = 0;
    int ambient = 0;
    std::size_t vectorCount = 0;
    /// max ||beta v|| over the return vectors of this order.
    CertifiedReal maxDistance;
    FieldElement worstVector;
    bool symbolicFallback = false;
    std::string error;
};

struct CriterionProfile {
    FieldElement beta;
    double epsilon = 0.0;
    std::vector<CriterionLevel> levels;
    /// Eventually below epsilon and never back above it; fallback levels excluded.
    bool pass = false;
    /// First order from which every later value stays below epsilon, or -1.
    int settledFrom = -1;
};

/// Ambient levels sit this far above the order by default.
inline constexpr int kCriterionAmbientOffset = 2;

CriterionProfile returnVectorCriterion(const symbolic::FusionRule& f, const geometry::LengthAssignment& lengths,
                                       const FieldElement& beta, double epsilon, int nMax, int nMin = 0,
                                       int ambientOffset = kCriterionAmbientOffset);

enum class Verdict { Pass, Fail, Inconclusive };

const char* toString(Verdict v);

/// Pass when the profile settles below epsilon, Fail when its last clean level is at or above it.
Verdict verdictOf(const CriterionProfile& p);
/// Pass for a zero or vanishing trend, Fail when bounded away.
Verdict verdictOf(const ObstructionReport& r);

struct ScanRow {
    Candidate candidate;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<CriterionProfile> profile;
    std::optional<ObstructionReport> obstruction;
};

/// Return-vector criterion for every candidate, in candidate order.
std::vector<ScanRow> eigenGroupScan(const symbolic::FusionRule& f, const geometry::LengthAssignment& lengths,
                                    const std::vector<Candidate>& candidates, double epsilon, int nMax, int nMin = 0,
                                    int ambientOffset = kCriterionAmbientOffset);

/// Scrambled obstruction for every candidate, in candidate order.
std::vector<ScanRow> eigenGroupScan(const symbolic::ScrambleSchedule& schedule, LengthMode mode,
                                    const std::vector<Candidate>& candidates, const std::vector<int>& kappas);

} // namespace aperiodic::spectra
