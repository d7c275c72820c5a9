#include <cmath>

#include <gtest/gtest.h>

#include "aperiodic/spectra/criterion.hpp"
#include "aperiodic/symbolic/fusion.hpp"
#include "oracles/oracles.hpp"

using namespace aperiodic;
using namespace aperiodic::spectra;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

FieldElement invSqrt5()
{
    return FieldElement::sqrt5().inverse();
}

} // namespace

TEST(Candidates, Generators)
{
    auto g = goldenHeightCandidates(3);
    EXPECT_EQ(g.size(), 49u);
    for (const auto& c : g)
        EXPECT_EQ((c.beta * FieldElement::sqrt5()).coeffs()[0].get_den(), 1);
    EXPECT_EQ(goldenIntegerCandidates(1).size(), 9u);
    auto ints = integerCandidates(-2, 2);
    ASSERT_EQ(ints.size(), 5u);
    EXPECT_EQ(ints.front().beta, FieldElement(-2L));
}

TEST(Decay, InverseSqrtFiveIsGeometric)
{
    auto d = phiPowerDecay(invSqrt5(), 20);
    EXPECT_TRUE(d.forwardGeometric);
    EXPECT_TRUE(d.backwardGeometric);
    EXPECT_NEAR(d.forward[10].toDouble(), 0.0036361232474, 1e-12);
    auto third = phiPowerDecay(FieldElement(Rational(1, 3)), 20);
    EXPECT_FALSE(third.forwardGeometric);
}

TEST(Decay, GeometricTail)
{
    std::vector<double> v;
    for (int n = 0; n < 16; ++n)
        v.push_back(std::pow(kPhi, -n));
    EXPECT_TRUE(geometricTail(v, 1 / kPhi));
    v.back() = 0.5;
    EXPECT_FALSE(geometricTail(v, 1 / kPhi));
}

TEST(Obstruction, GoldenMatchesOracle)
{
    auto r = obstructionScrambled(symbolic::ScrambleSchedule::pow2minus1(), LengthMode::Golden, invSqrt5(),
                                  {3, 5, 7, 9});
    ASSERT_EQ(r.levels.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& lv = r.levels[i];
        ASSERT_TRUE(lv.ok()) << lv.error;
        EXPECT_EQ(lv.kappa, oracle::kObstructionLevels[i]);
        EXPECT_NEAR(lv.dist1.toDouble(), oracle::kObstructionDist1[i], 1e-12);
        EXPECT_NEAR(lv.dist2.toDouble(), oracle::kObstructionDist2[i], 1e-12);
        EXPECT_TRUE(lv.identityAgrees);
    }
    EXPECT_EQ(r.trend, Trend::BoundedAway);
    EXPECT_EQ(verdictOf(r), Verdict::Fail);
}

TEST(Obstruction, UnitIntegersAreExactlyZero)
{
    for (long b = 0; b <= 3; ++b) {
        auto r = obstructionScrambled(symbolic::ScrambleSchedule::pow2minus1(), LengthMode::Unit, FieldElement(b),
                                      {3, 5, 7, 9});
        EXPECT_EQ(r.trend, Trend::Zero);
        for (const auto& lv : r.levels) {
            EXPECT_TRUE(lv.dist1.isPoint() && lv.dist1.hi() == 0);
            EXPECT_TRUE(lv.dist2.isPoint() && lv.dist2.hi() == 0);
        }
    }
}

TEST(Obstruction, UnitNonIntegralFloor)
{
    double worst = 1;
    for (const auto& c : goldenIntegerCandidates(3)) {
        if (c.beta.isRational())
            continue;
        auto r = obstructionScrambled(symbolic::ScrambleSchedule::pow2minus1(), LengthMode::Unit, c.beta,
                                      {3, 5, 7, 9});
        worst = std::min(worst, r.minOfMin);
    }
    EXPECT_NEAR(worst, oracle::kUnitNonIntegralFloor, 1e-12);
}

TEST(Obstruction, BadLevelsAreReported)
{
    auto r = obstructionScrambled(symbolic::ScrambleSchedule::pow2minus1(), LengthMode::Golden, invSqrt5(),
                                  {1, 4, 99});
    for (const auto& lv : r.levels)
        EXPECT_FALSE(lv.ok());
    EXPECT_EQ(r.trend, Trend::Inconclusive);
}

TEST(Criterion, FibonacciInverseSqrtFive)
{
    auto f = symbolic::FusionRule::fibonacci();
    auto g = geometry::LengthAssignment::golden(geometry::Alphabet::fibonacci());
    auto p = returnVectorCriterion(*f, g, invSqrt5(), 1e-3, 15, 0, 3);
    ASSERT_EQ(p.levels.size(), 16u);
    for (const auto& lv : p.levels)
        EXPECT_NEAR(lv.maxDistance.toDouble(), std::pow(kPhi, -(lv.order + 1)) / std::sqrt(5.0), 1e-12);
    EXPECT_TRUE(p.pass);
    EXPECT_EQ(verdictOf(p), Verdict::Pass);
}

TEST(Criterion, FibonacciThirdFails)
{
    auto f = symbolic::FusionRule::fibonacci();
    auto g = geometry::LengthAssignment::golden(geometry::Alphabet::fibonacci());
    auto p = returnVectorCriterion(*f, g, FieldElement(Rational(1, 3)), 1e-3, 12, 0, 3);
    EXPECT_FALSE(p.pass);
    for (const auto& lv : p.levels)
        EXPECT_GE(lv.maxDistance.toDouble(), 0.05);
}

TEST(Scan, ScrambledGoldenCandidatesAllFailExceptZero)
{
    auto rows = eigenGroupScan(symbolic::ScrambleSchedule::pow2minus1(), LengthMode::Golden,
                               goldenHeightCandidates(3), {3, 5, 7, 9});
    ASSERT_EQ(rows.size(), 49u);
    double floor = 1;
    for (const auto& row : rows) {
        if (row.candidate.beta.isZero()) {
            EXPECT_NE(row.verdict, Verdict::Fail);
            continue;
        }
        EXPECT_EQ(row.verdict, Verdict::Fail) << row.candidate.label;
        const auto& lv = row.obstruction->levels;
        floor = std::min(floor, std::min(std::max(lv[2].dist1.toDouble(), lv[2].dist2.toDouble()),
                                         std::max(lv[3].dist1.toDouble(), lv[3].dist2.toDouble())));
    }
    EXPECT_NEAR(floor, oracle::kGoldenCandidateFloor, 1e-12);
}
