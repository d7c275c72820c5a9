#include "aperiodic/spectra/criterion.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic::spectra {

const char* toString(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Fail:
        return "FAIL";
    default:
        return "INCONCLUSIVE";
    }
}

CriterionProfile returnVectorCriterion(const symbolic::FusionRule& f, const geometry::LengthAssignment& lengths,
                                       const FieldElement& beta, double epsilon, int nMax, int nMin,
                                       int ambientOffset)
{
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw DomainError("epsilon must lie in (0, 1/2)");
    if (ambientOffset < 1)
        throw DomainError("ambient offset must be >= 1");
    CriterionProfile profile;
    profile.beta = beta;
    profile.epsilon = epsilon;
    for (int n = nMin; n <= nMax; ++n) {
        CriterionLevel lv;
        lv.order = n;
        lv.ambient = n + ambientOffset;
        lv.maxDistance = CertifiedReal::exact(Rational(0));
        try {
            auto set = geometry::returnVectors(f, lengths, n, lv.ambient);
            lv.symbolicFallback = set.symbolicFallback;
            lv.vectorCount = set.vectors.size();
            bool first = true;
            for (const auto& v : set.vectors) {
                auto d = algebra::fracDist(beta * v.value).value;
                if (first || lv.maxDistance.mid() < d.mid()) {
                    first = false;
                    lv.maxDistance = d;
                    lv.worstVector = v.value;
                }
            }
        } catch (const Error& e) {
            lv.error = e.what();
        }
        profile.levels.push_back(std::move(lv));
    }

    // Trend over clean levels only.
    std::vector<const CriterionLevel*> clean;
    for (const auto& lv : profile.levels)
        if (lv.error.empty() && !lv.symbolicFallback && lv.vectorCount > 0)
            clean.push_back(&lv);
    int settled = -1;
    for (std::size_t i = clean.size(); i-- > 0;) {
        if (clean[i]->maxDistance.toDouble() >= epsilon)
            break;
        settled = static_cast<int>(i);
    }
    if (settled >= 0) {
        profile.settledFrom = clean[static_cast<std::size_t>(settled)]->order;
        profile.pass = clean.back()->maxDistance.toDouble() <=
                       clean[static_cast<std::size_t>(settled)]->maxDistance.toDouble();
    }
    return profile;
}

Verdict verdictOf(const CriterionProfile& p)
{
    if (p.pass)
        return Verdict::Pass;
    for (auto it = p.levels.rbegin(); it != p.levels.rend(); ++it)
        if (it->error.empty() && !it->symbolicFallback && it->vectorCount > 0)
            return it->maxDistance.toDouble() >= p.epsilon ? Verdict::Fail : Verdict::Inconclusive;
    return Verdict::Inconclusive;
}

Verdict verdictOf(const ObstructionReport& r)
{
    switch (r.trend) {
    case Trend::Zero:
    case Trend::ToZero:
        return Verdict::Pass;
    case Trend::BoundedAway:
        return Verdict::Fail;
    default:
        return Verdict::Inconclusive;
    }
}

std::vector<ScanRow> eigenGroupScan(const symbolic::FusionRule& f, const geometry::LengthAssignment& lengths,
                                    const std::vector<Candidate>& candidates, double epsilon, int nMax, int nMin,
                                    int ambientOffset)
{
    std::vector<ScanRow> rows;
    for (const auto& c : candidates) {
        ScanRow row;
        row.candidate = c;
        row.profile = returnVectorCriterion(f, lengths, c.beta, epsilon, nMax, nMin, ambientOffset);
        row.verdict = verdictOf(*row.profile);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScanRow> eigenGroupScan(const symbolic::ScrambleSchedule& schedule, LengthMode mode,
                                    const std::vector<Candidate>& candidates, const std::vector<int>& kappas)
{
    std::vector<ScanRow> rows;
    for (const auto& c : candidates) {
        ScanRow row;
        row.candidate = c;
        row.obstruction = obstructionScrambled(schedule, mode, c.beta, kappas);
        row.verdict = verdictOf(*row.obstruction);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace aperiodic::spectra
