#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "aperiodic/algebra/field.hpp"
#include "aperiodic/algebra/matrix.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/symbolic/morphism.hpp"

using namespace aperiodic;
using namespace aperiodic::algebra;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

FieldElement golden(long a, long b)
{
    return FieldElement(FieldDescriptor::golden(), {Rational(a), Rational(b)});
}

BigInt randomBig(std::mt19937_64& rng, int digits)
{
    std::string s = rng() % 2 ? "-" : "";
    s += char('1' + rng() % 9);
    for (int i = 1; i < digits; ++i)
        s += char('0' + rng() % 10);
    return BigInt(s);
}

} // namespace

TEST(Fibonacci, SmallValues)
{
    std::vector<long> expect = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (long n = 0; n < 11; ++n)
        EXPECT_EQ(fibonacci(n), expect[n]);
    EXPECT_EQ(fibonacci(100).get_str(), "354224848179261915075");
}

TEST(Golden, PowersMatchFibonacci)
{
    for (long n = 1; n < 40; ++n)
        EXPECT_EQ(FieldElement::goldenPower(n), golden(fibonacci(n - 1).get_si(), fibonacci(n).get_si()));
    EXPECT_EQ(FieldElement::goldenPower(-1) * FieldElement::goldenPower(1), FieldElement(1L));
    EXPECT_EQ(FieldElement::goldenPower(0), FieldElement(1L));
}

TEST(Golden, SqrtFive)
{
    auto s = FieldElement::sqrt5();
    EXPECT_EQ(s, golden(-1, 2));
    EXPECT_EQ(s * s, FieldElement(5L));
    EXPECT_NEAR(s.toDouble(), std::sqrt(5.0), 1e-14);
}

TEST(Golden, ConjugateAndTrace)
{
    auto phi = golden(0, 1);
    EXPECT_NEAR(phi.conjugate().toDouble(), 1 - kPhi, 1e-14);
    EXPECT_EQ(phi.trace(), Rational(1));
    EXPECT_EQ(phi * phi.conjugate(), FieldElement(-1L));
}

TEST(Field, InverseAndSign)
{
    auto x = golden(3, -2);
    EXPECT_EQ(x * x.inverse(), FieldElement(1L));
    EXPECT_EQ(x.sign(), -1);
    EXPECT_EQ(golden(-1, 1).sign(), 1);
    EXPECT_EQ(FieldElement(0L).sign(), 0);
    EXPECT_THROW(FieldElement(0L).inverse(), DomainError);
}

TEST(Field, RejectsReducibleMinimalPolynomial)
{
    EXPECT_THROW(FieldDescriptor::create({BigInt(-4), BigInt(0), BigInt(1)}, Rational(1), Rational(3)),
                 ConstraintError);
}

TEST(Field, RingAxiomsOnRandomElements)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto r = [&] {
            return FieldElement(FieldDescriptor::golden(),
                                {Rational(randomBig(rng, 20), BigInt(1 + rng() % 50)),
                                 Rational(randomBig(rng, 20), BigInt(1 + rng() % 50))});
        };
        auto a = r(), b = r(), c = r();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    }
}

TEST(FracDist, KnownValues)
{
    auto third = fracDist(FieldElement(Rational(1, 3)));
    EXPECT_TRUE(third.value.contains(Rational(1, 3)));
    // ||phi^10|| = phi^-10 because phi^10 + phi^-10 = L_10 = 123.
    auto d = fracDist(FieldElement::goldenPower(10));
    EXPECT_NEAR(d.value.toDouble(), std::pow(kPhi, -10), 1e-12);
    EXPECT_TRUE(d.viaConjugate);
    auto half = fracDist(FieldElement(Rational(7, 2)));
    EXPECT_TRUE(half.halfAmbiguous || half.value.contains(Rational(1, 2)));
}

TEST(FracDist, ConjugateRouteAgreesWithDirect)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto x = FieldElement(FieldDescriptor::golden(),
                              {Rational(randomBig(rng, 30), BigInt(1 + rng() % 1000)),
                               Rational(randomBig(rng, 30), BigInt(1 + rng() % 1000))});
        auto a = fracDistConjugate(x), b = fracDistDirect(x);
        EXPECT_NEAR(a.value.toDouble(), b.value.toDouble(), 1e-10);
    }
}

TEST(Embed, EnclosureWidthRespectsAccuracy)
{
    auto acc = Rational(1, BigInt("1000000000000000000000000000000"));
    auto e = embed(FieldElement::sqrt5(), acc);
    EXPECT_LE(e.width(), acc);
    EXPECT_TRUE(e.lo() * e.lo() <= 5 && e.hi() * e.hi() >= 5);
}

TEST(Matrix, AbcCharacteristicPolynomial)
{
    auto m = symbolic::substitutionMatrix(symbolic::abcMorphism());
    auto p = characteristicPolynomial(m);
    EXPECT_EQ(p, Polynomial::fromIntegers({BigInt(-1), BigInt(6), BigInt(-5), BigInt(1)}));
    auto ev = isolateEigenvalues(m);
    ASSERT_EQ(ev.size(), 3u);
    EXPECT_NEAR(ev[0].approx, 3.24698, 5e-4);
    EXPECT_NEAR(ev[1].approx, 1.55496, 5e-4);
    EXPECT_NEAR(ev[2].approx, 0.198062, 5e-4);
}

TEST(Matrix, AbcEigenvectorsAreExact)
{
    auto m = symbolic::substitutionMatrix(symbolic::abcMorphism());
    auto ev = isolateEigenvalues(m);
    std::vector<std::vector<double>> expect = {{-0.445042, 1, -0.801938}, {-1.80194, 1, 2.24698}};
    for (int which : {2, 3}) {
        auto v = eigenvectorExact(m, which);
        EXPECT_FALSE(v.degenerate);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_NEAR(v.components[i].toDouble(), expect[which - 2][i], 5e-4);
        auto lambda = FieldElement::generator(v.components[0].field());
        for (const auto& r : eigenResidual(m, lambda, v.components))
            EXPECT_TRUE(r.isZero());
    }
}

TEST(Matrix, FibonacciEigenvalues)
{
    auto ev = isolateEigenvalues(symbolic::substitutionMatrix(symbolic::fibonacciMorphism()));
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0].approx, kPhi, 1e-9);
    EXPECT_NEAR(ev[1].approx, 1 - kPhi, 1e-9);
}

TEST(Matrix, RationalIndependence)
{
    EXPECT_TRUE(rationalIndependence({FieldElement(1L), golden(0, 1)}));
    EXPECT_FALSE(rationalIndependence({golden(1, 1), golden(2, 2)}));
    EXPECT_FALSE(rationalIndependence({FieldElement(1L), golden(0, 1), golden(3, -1)}));
}

TEST(Matrix, RankAndSolve)
{
    RationalMatrix a = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_EQ(rankOf(a), 1);
    EXPECT_THROW(solveLinear(a, {Rational(1), Rational(1)}), DegeneracyError);
    RationalMatrix b = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solveLinear(b, {Rational(3), Rational(4)});
    EXPECT_EQ(x[0], Rational(1));
    EXPECT_EQ(x[1], Rational(1));
}
