#include "aperiodic/spectra/obstruction.hpp"

#include <algorithm>

#include "aperiodic/error.hpp"
#include "aperiodic/geometry/lengths.hpp"
#include "aperiodic/symbolic/fusion.hpp"

namespace aperiodic::spectra {

const char* toString(LengthMode m)
{
    return m == LengthMode::Golden ? "golden" : "unit";
}

const char* toString(Trend t)
{
    switch (t) {
    case Trend::Zero:
        return "zero";
    case Trend::ToZero:
        return "to-zero";
    case Trend::BoundedAway:
        return "bounded-away";
    default:
        return "inconclusive";
    }
}

namespace {

FieldElement blockLength(LengthMode mode, long N)
{
    // b and e both have length 1, so only the a/b split of S(a) matters.
    if (mode == LengthMode::Golden)
        return FieldElement::goldenPower(N + 1);
    return FieldElement(Rational(algebra::fibonacci(N + 2)));
}

std::string levelProblem(const symbolic::ScrambleSchedule& s, int kappa)
{
    if (kappa < 1 || kappa % 2 == 0)
        return "level " + std::to_string(kappa) + " is not odd";
    if (kappa > s.maxLevel())
        return "level " + std::to_string(kappa) + " beyond the schedule";
    std::vector<std::string> v;
    for (int n = 1; n <= kappa; ++n)
        for (auto& msg : s.violationsAt(n))
            v.push_back(std::move(msg));
    if (!v.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < v.size(); ++i)
            joined += (i ? "; " : "") + v[i];
        return joined;
    }
    long N = s.N(kappa - 1);
    if (N < 2)
        return "N(" + std::to_string(kappa - 1) + ")=" + std::to_string(N) + " too small for v_2";
    // v_1 needs f_{N-1} + 1 consecutive copies of S(a) inside the germ.
    if (algebra::fibonacci(s.delta(kappa)) <= algebra::fibonacci(N - 1))
        return "germ at level " + std::to_string(kappa) + " holds only f_" + std::to_string(s.delta(kappa)) +
               " copies of the a-superletter";
    return {};
}

} // namespace

ObstructionReport obstructionScrambled(const symbolic::ScrambleSchedule& schedule, LengthMode mode,
                                       const FieldElement& beta, const std::vector<int>& kappas)
{
    ObstructionReport report;
    report.mode = mode;
    report.beta = beta;

    std::shared_ptr<const symbolic::FusionRule> rule;
    if (schedule.violations().empty())
        rule = symbolic::FusionRule::scrambled(schedule);

    const FieldElement phiSquaredPlusOne = FieldElement::goldenPower(2) + FieldElement(1L);
    for (int kappa : kappas) {
        ObstructionLevel lv;
        lv.kappa = kappa;
        lv.error = levelProblem(schedule, kappa);
        if (!lv.ok()) {
            report.levels.push_back(std::move(lv));
            continue;
        }
        const long N = schedule.N(kappa - 1);
        lv.previousN = N;
        FieldElement block = blockLength(mode, N);
        if (rule) {
            auto lengths = mode == LengthMode::Golden ? geometry::LengthAssignment::golden(rule->alphabet())
                                                      : geometry::LengthAssignment::unit(rule->alphabet());
            if (lengths.lengthOf(rule->superletterPopulation(kappa - 1, symbolic::kA)) != block) {
                lv.error = "superletter length disagrees with the closed form";
                report.levels.push_back(std::move(lv));
                continue;
            }
        }
        lv.v1 = FieldElement(Rational(algebra::fibonacci(N - 1))) * block;
        lv.v2 = FieldElement(Rational(algebra::fibonacci(N - 2))) * block;
        lv.dist1 = algebra::fracDist(beta * lv.v1).value;
        lv.dist2 = algebra::fracDist(beta * lv.v2).value;
        if (mode == LengthMode::Golden) {
            lv.identityChecked = true;
            bool agree = true;
            for (int m = 1; m <= 2; ++m) {
                const FieldElement& v = m == 1 ? lv.v1 : lv.v2;
                auto five = algebra::fracDist(FieldElement(5L) * beta * v).value;
                FieldElement sign((N - m) % 2 == 0 ? 1L : -1L);
                FieldElement product = beta * phiSquaredPlusOne *
                                       (FieldElement::goldenPower(2 * N - m) - sign * FieldElement::goldenPower(m));
                auto prod = algebra::fracDist(product).value;
                agree = agree && std::abs(five.toDouble() - prod.toDouble()) <= 1e-9;
                (m == 1 ? lv.five1 : lv.five2) = five;
                (m == 1 ? lv.product1 : lv.product2) = prod;
            }
            lv.identityAgrees = agree;
        }
        report.levels.push_back(std::move(lv));
    }

    std::vector<double> maxes;
    bool allZero = true;
    report.minOfMax = report.minOfMin = 1.0;
    for (const auto& lv : report.levels) {
        if (!lv.ok())
            continue;
        double d1 = lv.dist1.toDouble(), d2 = lv.dist2.toDouble();
        allZero = allZero && lv.dist1.hi() == 0 && lv.dist2.hi() == 0;
        maxes.push_back(std::max(d1, d2));
        report.minOfMax = std::min(report.minOfMax, std::max(d1, d2));
        report.minOfMin = std::min(report.minOfMin, std::min(d1, d2));
    }
    if (maxes.empty()) {
        report.trend = Trend::Inconclusive;
        report.minOfMax = report.minOfMin = 0.0;
    } else if (allZero) {
        report.trend = Trend::Zero;
    } else if (*std::min_element(maxes.begin() + static_cast<long>(maxes.size() / 2), maxes.end()) >=
               kBoundedAwayThreshold) {
        report.trend = Trend::BoundedAway;
    } else if (std::is_sorted(maxes.rbegin(), maxes.rend()) && maxes.back() < 1e-6) {
        report.trend = Trend::ToZero;
    } else {
        report.trend = Trend::Inconclusive;
    }
    return report;
}

} // namespace aperiodic::spectra
