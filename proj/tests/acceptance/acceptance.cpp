// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
//
//   acceptance [--only N]... [--known-unattainable N]...
//
// Exit status is 0 when every failing criterion is listed as known-unattainable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "aperiodic/algebra/matrix.hpp"
#include "aperiodic/geometry/deformation.hpp"
#include "aperiodic/geometry/return_vectors.hpp"
#include "aperiodic/meyer/eps_dual.hpp"
#include "aperiodic/meyer/spacing.hpp"
#include "aperiodic/spectra/criterion.hpp"
#include "aperiodic/symbolic/decompose.hpp"
#include "aperiodic/symbolic/fusion.hpp"
#include "oracles/oracles.hpp"

using namespace aperiodic;
using algebra::BigInt;
using algebra::FieldDescriptor;
using algebra::FieldElement;
using algebra::Rational;
using geometry::Alphabet;
using geometry::LengthAssignment;
using symbolic::kA;
using symbolic::kB;
using symbolic::Word;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures += (failures.empty() ? "" : "; ") + what;
        }
    }

    std::string text() const { return failures.empty() ? detail.str() : detail.str() + " | failed: " + failures; }
};

Word fib(long n)
{
    return symbolic::fibonacciMorphism().power(n).apply({kA});
}

Word abc12()
{
    return symbolic::abcMorphism().power(12).apply({kA});
}

LengthAssignment abcDeformed(int eigen)
{
    return LengthAssignment::deformed(Alphabet::abc(), symbolic::abcMorphism(), eigen, Rational(1, 8));
}

std::string fmt(double x, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

// ---------------------------------------------------------------------------

void fibonacciCounts(Outcome& o)
{
    Word w = {kA};
    for (long n = 0; n <= 25; ++n) {
        auto p = symbolic::population(w, 2);
        o.require(p[0] == algebra::fibonacci(n + 1) && p[1] == algebra::fibonacci(n), "counts at n=" + std::to_string(n));
        w = symbolic::fibonacciMorphism().apply(w);
    }
    o.detail << "n=0..25 letter counts (f_{n+1}, f_n)";
}

void roundTrip(Outcome& o)
{
    auto f = symbolic::FusionRule::scrambled(symbolic::ScrambleSchedule::pow2minus1());
    std::size_t decompositions = 0, parts = 0, ambiguous = 0;
    for (int n = 0; n <= 4; ++n)
        for (int m = n + 1; m <= std::min(n + 2, 5); ++m)
            for (symbolic::Letter x = 0; x < 3; ++x) {
                auto w = f->superletter(m, x);
                auto d = symbolic::decompose(*f, *w, n);
                auto types = geometry::typeSequence(*f, n, m, x, f->budget());
                bool ok = d.parts.size() == types.size() && !d.leadingPartial && !d.trailingPartial;
                std::size_t offset = 0;
                for (std::size_t i = 0; ok && i < types.size(); ++i) {
                    const auto& p = d.parts[i];
                    bool typeOk = p.ambiguous ? types[i] != kA : p.type == types[i];
                    ok = typeOk && p.offset == offset && p.length == f->superletterLength(n, types[i]);
                    offset += p.length;
                    ambiguous += p.ambiguous;
                }
                o.require(ok, "S_" + std::to_string(m) + "(" + f->alphabet().symbol(x) + ") at level " +
                                  std::to_string(n));
                ++decompositions;
                parts += d.parts.size();
            }
    o.detail << decompositions << " superletter decompositions, " << parts << " parts (" << ambiguous
             << " b/e-ambiguous by word identity)";

    Word w = fib(30);
    std::mt19937_64 rng(20240611);
    std::size_t letters = 0;
    for (int i = 0; i < 1000; ++i) {
        std::size_t len = 1 + rng() % 100000;
        std::size_t at = rng() % (w.size() - len);
        Word u(w.begin() + at, w.begin() + at + len);
        auto r = symbolic::desubstituteFibonacci(u);
        Word image = symbolic::fibonacciMorphism().apply(r.preimage);
        std::size_t checked = u.size() - (r.trailingAmbiguous ? 1 : 0);
        bool ok = r.offset + checked <= image.size() &&
                  std::equal(u.begin(), u.begin() + checked, image.begin() + r.offset);
        o.require(ok, "factor round trip #" + std::to_string(i));
        letters += len;
    }
    o.detail << "; 1000 random factors (" << letters << " letters) survive desubstitute/substitute";
}

void germFrequency(Outcome& o)
{
    auto s = symbolic::ScrambleSchedule::pow2minus1();
    auto f = symbolic::FusionRule::scrambled(s);
    double q = symbolic::germFrequency(*f, *f->superletter(5, kA), 3).get_d();
    double bound = std::pow(kPhi, -static_cast<double>(s.delta(4))) + 1e-3;
    o.require(q <= bound, "frequency above bound");
    o.detail << "germ frequency " << fmt(q) << " <= " << fmt(bound);
}

void fibonacciEigenvalues(Outcome& o)
{
    auto f = symbolic::FusionRule::fibonacci();
    auto g = LengthAssignment::golden(Alphabet::fibonacci());
    const int ambient = 3;
    double worstAt15 = 0, widest = 0;
    for (const auto& c : spectra::goldenHeightCandidates(3)) {
        auto p = spectra::returnVectorCriterion(*f, g, c.beta, 1e-3, 15, 0, ambient);
        std::vector<double> v;
        for (const auto& lv : p.levels) {
            o.require(lv.error.empty(), c.label + ": " + lv.error);
            v.push_back(lv.maxDistance.toDouble());
            widest = std::max(widest, lv.maxDistance.width().get_d());
        }
        o.require(v.size() == 16 && spectra::geometricTail(v, 1 / kPhi), c.label + " not geometric");
        o.require(!v.empty() && v.back() < 1e-3, c.label + " above 1e-3 at n=15");
        if (!v.empty())
            worstAt15 = std::max(worstAt15, v.back());
    }
    double floor = 1;
    for (auto q : {Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
        auto p = spectra::returnVectorCriterion(*f, g, FieldElement(q), 1e-3, 12, 0, ambient);
        for (const auto& lv : p.levels)
            floor = std::min(floor, lv.maxDistance.toDouble());
    }
    o.require(floor >= 0.05, "rational candidates drop below 0.05");
    o.require(widest <= 1e-9, "enclosures wider than 1e-9");
    o.detail << "49 candidates: worst at n=15 " << fmt(worstAt15) << " (ratio 1/phi over the tail); "
             << "1/3, 1/2, 2/5 stay >= " << fmt(floor) << " up to n=12";
}

void scrambledGolden(Outcome& o)
{
    auto s = symbolic::ScrambleSchedule::pow2minus1();
    const std::vector<int> kappas = {3, 5, 7, 9};
    auto r = spectra::obstructionScrambled(s, spectra::LengthMode::Golden, FieldElement::sqrt5().inverse(), kappas);
    double low = 1, identityGap = 0;
    for (const auto& lv : r.levels) {
        o.require(lv.ok(), lv.error);
        if (!lv.ok())
            continue;
        low = std::min({low, lv.dist1.toDouble(), lv.dist2.toDouble()});
        identityGap = std::max({identityGap, std::abs(lv.five1.toDouble() - lv.product1.toDouble()),
                                std::abs(lv.five2.toDouble() - lv.product2.toDouble())});
        o.require(lv.identityAgrees, "identity at level " + std::to_string(lv.kappa));
    }
    const auto& last = r.levels.back();
    double d1 = last.dist1.toDouble(), d2 = last.dist2.toDouble();
    o.require(std::abs(d1 - std::pow(kPhi, -2) / 5) <= 1e-3, "||beta v1|| at level 9");
    o.require(std::abs(d2 - std::pow(kPhi, -3) / 5) <= 1e-3, "||beta v2|| at level 9");
    o.require(low >= 0.04, "distance below 0.04");
    o.require(identityGap <= 1e-9, "identity disagreement");
    std::size_t fails = 0, nonzero = 0;
    for (const auto& row : spectra::eigenGroupScan(s, spectra::LengthMode::Golden, spectra::goldenHeightCandidates(3),
                                                   kappas)) {
        if (row.candidate.beta.isZero())
            continue;
        ++nonzero;
        fails += row.verdict == spectra::Verdict::Fail;
        o.require(row.verdict == spectra::Verdict::Fail, row.candidate.label + " not FAIL");
    }
    o.detail << "kappa=9: " << fmt(d1, 8) << ", " << fmt(d2, 8) << "; min over levels " << fmt(low)
             << "; identity gap " << fmt(identityGap, 3) << "; FAIL for " << fails << "/" << nonzero
             << " nonzero candidates";
}

void scrambledUnit(Outcome& o)
{
    auto s = symbolic::ScrambleSchedule::pow2minus1();
    const std::vector<int> kappas = {3, 5, 7, 9};
    for (long b = 0; b <= 3; ++b) {
        auto r = spectra::obstructionScrambled(s, spectra::LengthMode::Unit, FieldElement(b), kappas);
        for (const auto& lv : r.levels)
            o.require(lv.ok() && lv.dist1.isPoint() && lv.dist1.hi() == 0 && lv.dist2.isPoint() &&
                          lv.dist2.hi() == 0,
                      "beta=" + std::to_string(b) + " not exactly 0");
    }
    double worst = 1;
    std::size_t count = 0;
    for (const auto& c : spectra::goldenIntegerCandidates(3)) {
        if (c.beta.isRational())
            continue;
        ++count;
        auto r = spectra::obstructionScrambled(s, spectra::LengthMode::Unit, c.beta, kappas);
        for (const auto& lv : r.levels) {
            o.require(lv.ok(), lv.error);
            if (lv.ok())
                worst = std::min({worst, lv.dist1.toDouble(), lv.dist2.toDouble()});
        }
    }
    o.require(worst >= 0.02, "non-integral candidate below 0.02");
    o.require(std::abs(worst - oracle::kUnitNonIntegralFloor) <= 1e-12, "floor differs from the pinned oracle");
    o.detail << "beta=0..3 exactly 0; " << count << " non-integral candidates, min distance " << fmt(worst, 10)
             << " (oracle " << fmt(oracle::kUnitNonIntegralFloor, 10) << ")";
}

void nonMeyer(Outcome& o)
{
    auto l3 = abcDeformed(3);
    Word w = abc12();
    bool independent = algebra::rationalIndependence(l3.lengths());
    o.require(independent, "(a) lengths dependent");

    auto growth = meyer::spacingGrowth(w, l3, {100, 1000, 10000, 100000});
    double e = growth.fit.exponent;
    o.require(std::abs(e - 0.375) <= 0.05, "(b) exponent " + fmt(e));

    Word prefix(w.begin(), w.begin() + 200000);
    meyer::PrefixCounts pc(prefix, 3);
    bool complete = pc.factorPopulations(10000).size() == growth.counts[2].count;
    o.require(complete, "(c) prefix misses length-10^4 populations");
    auto prof = meyer::gapProfile(prefix, l3, {100, 1000, 10000});
    std::vector<double> x, y;
    for (const auto& en : prof.entries) {
        x.push_back(static_cast<double>(en.scale));
        y.push_back(en.gapApprox);
    }
    double factor = y.front() / y.back();
    double slope = meyer::fitPowerLaw(x, y).exponent;
    o.require(factor >= 3, "(c) drop factor " + fmt(factor));
    o.require(std::abs(slope + 0.375) <= 0.08, "(c) slope " + fmt(slope));

    auto unit = meyer::gapProfile(prefix, LengthAssignment::unit(Alphabet::abc()), {100, 1000, 10000});
    bool ones = true;
    for (const auto& en : unit.entries)
        ones = ones && en.gap == FieldElement(1L);
    o.require(ones, "(d) unit gap not 1");

    o.detail << "(a) independent=" << independent << "; (b) exponent " << fmt(e, 4) << "; (c) gaps "
             << fmt(y[0]) << ", " << fmt(y[1]) << ", " << fmt(y[2]) << ", factor " << fmt(factor, 4) << ", slope "
             << fmt(slope, 4) << "; (d) unit gap 1: " << ones;
}

void cochains(Outcome& o)
{
    Word w = abc12();
    w.resize(1000000);
    auto unit = LengthAssignment::unit(Alphabet::abc());
    auto s3 = geometry::displacementCochain(w, unit, abcDeformed(3));
    auto s2 = geometry::displacementCochain(w, unit, abcDeformed(2));
    double change = std::abs(s3.runningSup.back() - s3.runningSup[w.size() / 2]);
    o.require(s3.stabilized && change < 1e-6, "xi3 sup not stabilized");
    std::vector<double> x, y;
    for (std::size_t k = 100; k <= 1000000; k *= 10) {
        x.push_back(static_cast<double>(k));
        y.push_back(s2.supUpTo(k));
    }
    double e = meyer::fitPowerLaw(x, y).exponent;
    o.require(std::abs(e - 0.375) <= 0.08, "xi2 growth exponent " + fmt(e));
    o.require(!s2.stabilized, "xi2 sup stabilized");
    o.detail << "xi3 sup " << fmt(s3.supAbs, 10) << " (change " << fmt(change, 3) << " over the last half); xi2 sup "
             << fmt(s2.supAbs) << ", exponent " << fmt(e, 4);
}

bool gridMember(const std::vector<double>& pts, double beta, double eps)
{
    for (double x : pts) {
        double t = beta * x;
        if (2 * std::abs(std::sin(M_PI * (t - std::floor(t)))) > eps)
            return false;
    }
    return true;
}

std::size_t gridMismatches(const std::vector<double>& pts, double eps, double window)
{
    auto r = meyer::epsDual(pts, eps, window);
    std::size_t bad = 0;
    for (int k = 0; k <= static_cast<int>(std::lround(window / 1e-4)); ++k) {
        double beta = k * 1e-4;
        bool near = std::any_of(r.intervals.begin(), r.intervals.end(), [&](const meyer::Interval& iv) {
            return std::abs(beta - iv.lo) < 1e-4 || std::abs(beta - iv.hi) < 1e-4;
        });
        if (!near && r.contains(beta) != gridMember(pts, beta, eps))
            ++bad;
    }
    return bad;
}

std::vector<double> shifted(const geometry::Patch& p, std::size_t from, std::size_t count)
{
    std::vector<double> out;
    double origin = p.approxPosition(from);
    for (std::size_t k = from; k < from + count; ++k)
        out.push_back(p.approxPosition(k) - origin);
    return out;
}

void epsDuals(Outcome& o)
{
    Word fw = fib(20);
    fw.resize(999);
    auto golden = geometry::suspend(fw, LengthAssignment::golden(Alphabet::fibonacci()));
    auto gr = meyer::epsDual(golden, 0.5, 10);
    o.require(gr.maxGap <= oracle::kGoldenEpsDualMaxGap + 1e-9, "golden maxGap above oracle");

    Word aw = symbolic::abcMorphism().power(9).apply({kA});
    aw.resize(9999);
    auto abcPatch = geometry::suspend(aw, abcDeformed(3));
    std::vector<double> gaps;
    for (std::size_t n : {100, 1000, 10000})
        gaps.push_back(meyer::epsDual(shifted(abcPatch, 0, n), 0.5, 10).maxGap);
    o.require(gaps[0] < gaps[1] && gaps[1] < gaps[2], "abc maxGap not increasing");

    std::size_t mismatches = 0, subpatches = 0;
    for (std::size_t from : {0, 137, 500, 911}) {
        mismatches += gridMismatches(shifted(golden, from, 50), 0.5, 10);
        mismatches += gridMismatches(shifted(abcPatch, from, 50), 0.5, 10);
        subpatches += 2;
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " grid mismatches");
    o.detail << "golden maxGap " << fmt(gr.maxGap, 10) << " (oracle " << fmt(oracle::kGoldenEpsDualMaxGap, 10)
             << "); abc maxGap " << fmt(gaps[0], 8) << " < " << fmt(gaps[1], 8) << " < " << fmt(gaps[2], 8) << "; grid "
             << "oracle agrees on " << subpatches << " 50-vertex subpatches";
}

BigInt randomBig(std::mt19937_64& rng)
{
    std::string s = rng() % 2 ? "-" : "";
    s += char('1' + rng() % 9);
    for (int i = 0; i < 30; ++i)
        s += char('0' + rng() % 10);
    return BigInt(s);
}

void arithmetic(Outcome& o)
{
    std::mt19937_64 rng(1000003);
    auto cubic = abcDeformed(3).field();
    std::size_t axiomFailures = 0;
    double worstGap = 0;
    for (int i = 0; i < 1000; ++i) {
        auto q = [&] { return Rational(randomBig(rng), BigInt(1 + rng() % 1000)); };
        auto g = [&] { return FieldElement(FieldDescriptor::golden(), {q(), q()}); };
        auto c = [&] { return FieldElement(cubic, {q(), q(), q()}); };
        for (int pass = 0; pass < 2; ++pass) {
            auto a = pass ? c() : g(), b = pass ? c() : g(), d = pass ? c() : g();
            bool ok = (a + b) + d == a + (b + d) && (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d &&
                      a * b == b * a && a + FieldElement(0L) == a && a * FieldElement(1L) == a &&
                      (a - a).isZero() && a * a.inverse() == FieldElement(1L);
            if (!pass)
                ok = ok && (a * b).conjugate() == a.conjugate() * b.conjugate();
            axiomFailures += !ok;
            if (!pass) {
                double x = algebra::fracDistConjugate(a).value.toDouble();
                double y = algebra::fracDistDirect(a).value.toDouble();
                worstGap = std::max(worstGap, std::abs(x - y));
            }
        }
    }
    o.require(axiomFailures == 0, std::to_string(axiomFailures) + " axiom failures");
    o.require(worstGap <= 1e-10, "fracDist routes differ by " + fmt(worstGap, 3));

    auto m = symbolic::substitutionMatrix(symbolic::abcMorphism());
    auto p = algebra::characteristicPolynomial(m);
    o.require(p == algebra::Polynomial::fromIntegers({BigInt(-1), BigInt(6), BigInt(-5), BigInt(1)}),
              "characteristic polynomial " + p.toString());
    auto ev = algebra::isolateEigenvalues(m);
    const double expect[] = {3.247, 1.555, 0.1981};
    o.require(ev.size() == 3, "three real eigenvalues");
    for (std::size_t i = 0; i < ev.size() && i < 3; ++i)
        o.require(std::abs(ev[i].approx - expect[i]) <= 5e-4, "eigenvalue " + fmt(ev[i].approx));
    o.detail << "2000 random triples (golden and cubic), 10^30-scale coefficients; fracDist routes agree to "
             << fmt(worstGap, 3) << "; " << p.toString() << ", roots " << fmt(ev[0].approx) << ", "
             << fmt(ev[1].approx) << ", " << fmt(ev[2].approx);
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> only, known;
    for (int i = 1; i + 1 < argc; i += 2) {
        int n = std::atoi(argv[i + 1]);
        if (!std::strcmp(argv[i], "--only"))
            only.insert(n);
        else if (!std::strcmp(argv[i], "--known-unattainable"))
            known.insert(n);
        else {
            std::fprintf(stderr, "usage: %s [--only N]... [--known-unattainable N]...\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"Fibonacci letter counts", fibonacciCounts},
        {"recognizability round trip", roundTrip},
        {"germ frequency bound", germFrequency},
        {"Fibonacci golden eigenvalues", fibonacciEigenvalues},
        {"scrambled golden obstruction", scrambledGolden},
        {"scrambled unit obstruction", scrambledUnit},
        {"non-Meyer shape change", nonMeyer},
        {"cochain boundedness dichotomy", cochains},
        {"eps-dual density contrast", epsDuals},
        {"exact arithmetic properties", arithmetic},
    };

    int passed = 0, failed = 0, unexpected = 0;
    double total = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id))
            continue;
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        std::printf("criterion %2d: %s  %s (%.2f s): %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                    o.text().c_str());
        std::fflush(stdout);
        if (o.pass) {
            ++passed;
        } else {
            ++failed;
            unexpected += !known.count(id);
        }
    }
    std::printf("summary: %d PASS, %d FAIL (%d not listed as known-unattainable), %.1f s\n", passed, failed,
                unexpected, total);
    return unexpected == 0 ? 0 : 1;
}
