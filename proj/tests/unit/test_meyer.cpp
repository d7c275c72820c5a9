#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "aperiodic/geometry/patch.hpp"
#include "aperiodic/meyer/eps_dual.hpp"
#include "aperiodic/meyer/phase.hpp"
#include "aperiodic/meyer/spacing.hpp"
#include "aperiodic/symbolic/morphism.hpp"
#include "oracles/oracles.hpp"

using namespace aperiodic;
using namespace aperiodic::meyer;
using geometry::Alphabet;
using geometry::LengthAssignment;
using symbolic::kA;

namespace {

Word fib(long n)
{
    return symbolic::fibonacciMorphism().power(n).apply({kA});
}

Word abc(long n)
{
    return symbolic::abcMorphism().power(n).apply({kA});
}

LengthAssignment xi3()
{
    return LengthAssignment::deformed(Alphabet::abc(), symbolic::abcMorphism(), 3, geometry::Rational(1, 8));
}

geometry::Patch goldenPatch(std::size_t vertices)
{
    Word w = fib(20);
    w.resize(vertices - 1);
    return geometry::suspend(w, LengthAssignment::golden(Alphabet::fibonacci()));
}

bool gridMember(const std::vector<double>& pts, double beta, double eps)
{
    for (double x : pts)
        if (std::abs(std::polar(1.0, 2 * std::numbers::pi * beta * x) - 1.0) > eps)
            return false;
    return true;
}

bool nearEndpoint(const EpsDualReport& r, double beta, double tol)
{
    for (const auto& iv : r.intervals)
        if (std::abs(beta - iv.lo) < tol || std::abs(beta - iv.hi) < tol)
            return true;
    return false;
}

} // namespace

TEST(EpsDual, HalfWidth)
{
    EXPECT_NEAR(admissibleHalfWidth(0.5), std::asin(0.25) / std::numbers::pi, 1e-15);
    EXPECT_NEAR(admissibleHalfWidth(2.0), 0.5, 1e-15);
}

TEST(EpsDual, GoldenPatchMatchesOracle)
{
    auto r = epsDual(goldenPatch(1000), 0.5, 10);
    EXPECT_EQ(r.intervals.size(), static_cast<std::size_t>(oracle::kGoldenEpsDualIntervals));
    EXPECT_NEAR(r.maxGap, oracle::kGoldenEpsDualMaxGap, 1e-9);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.contains(std::pow((1 + std::sqrt(5.0)) / 2, 4) / std::sqrt(5.0)));
}

TEST(EpsDual, AbcPatchesMatchOracle)
{
    Word w = abc(9);
    auto l = xi3();
    for (std::size_t i = 0; i < std::size(oracle::kAbcEpsDualSizes); ++i) {
        Word head(w.begin(), w.begin() + oracle::kAbcEpsDualSizes[i] - 1);
        auto r = epsDual(geometry::suspend(head, l), 0.5, 10);
        EXPECT_NEAR(r.maxGap, oracle::kAbcEpsDualMaxGap[i], 1e-8);
    }
}

TEST(EpsDual, MorePointsNeverEnlargeTheSet)
{
    auto p = goldenPatch(400).approxPositions();
    std::vector<double> half(p.begin(), p.begin() + 200);
    auto small = epsDual(half, 0.5, 10), large = epsDual(p, 0.5, 10);
    for (double beta = 0.0005; beta < 10; beta += 0.001)
        if (large.contains(beta))
            EXPECT_TRUE(small.contains(beta)) << beta;
}

TEST(EpsDual, GridOracleAgrees)
{
    auto pts = goldenPatch(50).approxPositions();
    auto r = epsDual(pts, 0.5, 10);
    std::size_t checked = 0;
    for (int k = 0; k <= 100000; ++k) {
        double beta = k * 1e-4;
        if (nearEndpoint(r, beta, 1e-4))
            continue;
        ASSERT_EQ(r.contains(beta), gridMember(pts, beta, 0.5)) << beta;
        ++checked;
    }
    EXPECT_GT(checked, 99000u);
}

TEST(EpsDual, SinglePointIsDegenerate)
{
    auto r = epsDual(std::vector<double>{0.0}, 0.5, 3);
    EXPECT_TRUE(r.degenerate);
    ASSERT_EQ(r.intervals.size(), 1u);
    EXPECT_EQ(r.intervals[0].hi, 3.0);
}

TEST(EpsDual, WorstPhase)
{
    EXPECT_NEAR(worstPhase({0.0, 0.5}, 1.0), 2.0, 1e-15);
    EXPECT_NEAR(worstPhase({0.0, 2.0}, 1.0), 0.0, 1e-12);
}

TEST(Phase, EigenvalueCollarsTightenButOthersDoNot)
{
    auto p = goldenPatch(17001);
    auto beta = geometry::FieldElement::sqrt5().inverse();
    auto r5 = phaseDefect(p, beta, 5), r20 = phaseDefect(p, beta, 20);
    EXPECT_LT(r20.worstDiameter, r5.worstDiameter);
    EXPECT_LT(r20.worstDiameter, 0.2);
    auto third = phaseDefect(p, geometry::FieldElement(geometry::Rational(1, 3)), 20);
    EXPECT_GT(third.worstDiameter, 1.5);
}

TEST(Phase, ChordalDiameter)
{
    EXPECT_NEAR(chordalDiameter({0.0L, 0.5L}), 2.0, 1e-15);
    EXPECT_NEAR(chordalDiameter({0.1L, 0.1L}), 0.0, 1e-15);
    EXPECT_NEAR(chordalDiameter({0.0L, 0.25L}), std::sqrt(2.0), 1e-12);
}

TEST(Spacing, PowerFitRecoversExponent)
{
    std::vector<double> x = {10, 100, 1000}, y;
    for (double v : x)
        y.push_back(3 * std::pow(v, 0.4));
    auto f = fitPowerLaw(x, y);
    EXPECT_NEAR(f.exponent, 0.4, 1e-12);
    EXPECT_NEAR(f.residual, 0.0, 1e-12);
}

TEST(Spacing, FibonacciFactorsHaveTwoPopulations)
{
    PrefixCounts pc(fib(20), 2);
    for (std::size_t m : {1, 7, 100, 1000})
        EXPECT_EQ(pc.factorPopulations(m).size(), 2u);
}

TEST(Spacing, AbcCountsMatchOracle)
{
    auto g = spacingGrowth(abc(12), xi3(), {100, 1000, 10000, 100000});
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(g.counts[i].count, static_cast<std::size_t>(oracle::kAbcSpacingCounts[i]));
    EXPECT_TRUE(g.lengthsIndependent);
    EXPECT_TRUE(g.warnings.empty());
}

TEST(Spacing, DependentLengthsWarn)
{
    auto g = spacingGrowth(abc(8), LengthAssignment::unit(Alphabet::abc()), {10, 100});
    EXPECT_FALSE(g.lengthsIndependent);
    EXPECT_FALSE(g.warnings.empty());
}

TEST(Gap, UnitLengthsGiveUnitGap)
{
    auto prof = gapProfile(abc(9), LengthAssignment::unit(Alphabet::abc()), {10, 100, 1000});
    for (const auto& e : prof.entries)
        EXPECT_EQ(e.gap, geometry::FieldElement(1L));
}

TEST(Gap, UnionGapMatchesOracle)
{
    Word w = abc(12);
    w.resize(200000);
    auto prof = gapProfile(w, xi3(), {100, 1000});
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_NEAR(prof.entries[i].gapApprox, oracle::kUnionGap[i], 1e-10);
}
