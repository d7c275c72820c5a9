#include <random>

#include <gtest/gtest.h>

#include "aperiodic/error.hpp"
#include "aperiodic/symbolic/decompose.hpp"
#include "aperiodic/symbolic/fusion.hpp"

using namespace aperiodic;
using namespace aperiodic::symbolic;

namespace {

Word fib(long n)
{
    return fibonacciMorphism().power(n).apply({kA});
}

} // namespace

TEST(Alphabet, ParseAndRender)
{
    auto& al = Alphabet::scrambled();
    EXPECT_EQ(al.render(al.parse("abeab")), "abeab");
    EXPECT_TRUE(al.isGerm(2));
    EXPECT_THROW(al.parse("abx"), Error);
}

TEST(Morphism, FibonacciWords)
{
    auto& al = Alphabet::fibonacci();
    EXPECT_EQ(al.render(fib(5)), "abaababaabaab");
    for (long n = 0; n <= 20; ++n) {
        auto p = population(fib(n), 2);
        EXPECT_EQ(p[0], fibonacciNumber(n + 1));
        EXPECT_EQ(p[1], fibonacciNumber(n));
    }
}

TEST(Morphism, ComposeAndPowerAgree)
{
    auto& s = abcMorphism();
    EXPECT_EQ(s.compose(s).compose(s), s.power(3));
    EXPECT_EQ(s.power(12).apply({kA}).size(), 1675961u);
    auto lengths = powerLengths(s, 12);
    EXPECT_EQ(lengths[0], 1675961);
}

TEST(Morphism, PowerRespectsBudget)
{
    EXPECT_THROW(fibonacciMorphism().power(60, 1000), BudgetError);
}

TEST(Schedule, DefaultValues)
{
    auto s = ScrambleSchedule::pow2minus1();
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(s.N(n), (1L << n) - 1);
    EXPECT_EQ(s.delta(4), 8);
    EXPECT_TRUE(s.violations().empty());
}

TEST(Schedule, ReportsEveryViolation)
{
    auto s = ScrambleSchedule::explicitList({0, 1, 2, 3});
    auto v = s.violations();
    EXPECT_EQ(v.size(), 2u);
    EXPECT_THROW(s.validate(), ConstraintError);
}

TEST(Scrambled, LevelMorphisms)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    auto& al = f->alphabet();
    auto m3 = f->morphismAt(3);
    EXPECT_EQ(al.render(m3.image(kA)), "abaababa");
    EXPECT_EQ(al.render(m3.image(kB)), "abaab");
    // odd level germ: a^{f_4} b^{f_3}
    EXPECT_EQ(al.render(m3.image(2)), "aaabb");
    auto m2 = f->morphismAt(2);
    EXPECT_EQ(al.render(m2.image(kA)), "aea");
}

TEST(Scrambled, SuperletterLengths)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    std::vector<long> a = {1, 2, 5, 34, 1597, 3524578};
    for (int l = 0; l <= 5; ++l) {
        EXPECT_EQ(f->superletterLength(l, kA), a[l]);
        EXPECT_EQ(f->superletterLength(l, kB), f->superletterLength(l, 2));
    }
    EXPECT_EQ(*f->superletter(2, kB), *f->superletter(2, 2));
    EXPECT_NE(*f->superletter(3, kB), *f->superletter(3, 2));
}

TEST(Desubstitute, RoundTripOnFactors)
{
    auto w = fib(25);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::size_t len = 2 + rng() % 5000;
        std::size_t at = rng() % (w.size() - len);
        Word u(w.begin() + at, w.begin() + at + len);
        auto r = desubstituteFibonacci(u);
        auto image = fibonacciMorphism().apply(r.preimage);
        ASSERT_LE(r.offset + u.size(), image.size() + 1);
        EXPECT_TRUE(std::equal(u.begin(), u.end() - (r.trailingAmbiguous ? 1 : 0), image.begin() + r.offset));
    }
}

TEST(Desubstitute, RejectsIllegalWords)
{
    auto& al = Alphabet::fibonacci();
    EXPECT_THROW(desubstituteFibonacci(al.parse("abba")), LanguageError);
    EXPECT_THROW(desubstituteFibonacci(al.parse("aaab")), LanguageError);
}

TEST(Decompose, SuperletterExpansionsSplitIntoTheirParts)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    for (int n = 0; n <= 3; ++n)
        for (Letter x = 0; x < 3; ++x) {
            auto w = f->superletter(n + 1, x);
            auto d = decompose(*f, *w, n);
            auto image = f->morphismAt(n + 1).image(x);
            ASSERT_EQ(d.parts.size(), image.size());
            std::size_t offset = 0;
            for (std::size_t i = 0; i < image.size(); ++i) {
                // S_2(b) = S_2(e) as words, so their last level-1 part is b or e.
                bool inherent = n == 1 && x != kA && i + 1 == image.size();
                EXPECT_EQ(d.parts[i].ambiguous, inherent);
                if (!inherent)
                    EXPECT_EQ(d.parts[i].type, image[i]);
                EXPECT_EQ(d.parts[i].offset, offset);
                offset += d.parts[i].length;
            }
            EXPECT_TRUE(d.verified);
        }
}

TEST(Decompose, ContextResolvesCollapsedLevel)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    auto d = decompose(*f, *f->superletter(3, kB), 1);
    for (const auto& p : d.parts)
        EXPECT_FALSE(p.ambiguous);
}

TEST(Decompose, GermFrequencyIsSmall)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    auto q = germFrequency(*f, *f->superletter(4, kA), 3);
    EXPECT_GT(q, 0);
    EXPECT_LT(q.get_d(), 0.03);
}

TEST(Unscramble, ProducesFibonacciLanguage)
{
    auto f = FusionRule::scrambled(ScrambleSchedule::pow2minus1());
    auto d = decompose(*f, *f->superletter(4, kA), 3);
    auto u = unscramble(*f, d);
    EXPECT_GT(u.germParts, 0u);
    Word w(u.word.begin(), u.word.end());
    for (auto x : w)
        EXPECT_LT(x, 2);
    EXPECT_NO_THROW(desubstituteFibonacci(w));
}
