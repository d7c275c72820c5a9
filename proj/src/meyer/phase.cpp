#include "aperiodic/meyer/phase.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "aperiodic/error.hpp"

namespace aperiodic::meyer {

namespace {

// Fractional part of an exact element, good to about 1e-20.
long double fractionalTurns(const FieldElement& x)
{
    auto enc = x.embed(algebra::Rational(algebra::BigInt(1), algebra::BigInt(1) << 80));
    algebra::Rational mid = enc.mid();
    algebra::BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
    algebra::Rational frac = mid - algebra::Rational(fl);
    // Two-step conversion keeps long double precision.
    long double hi = frac.get_d();
    long double lo = algebra::Rational(frac - algebra::Rational(static_cast<double>(hi))).get_d();
    return hi + lo;
}

} // namespace

std::vector<long double> phaseTurns(const geometry::Patch& p, const FieldElement& beta)
{
    const std::size_t classes = p.classLengths().size();
    std::vector<long double> step(classes);
    for (std::size_t c = 0; c < classes; ++c)
        step[c] = fractionalTurns(beta * p.classLengths()[c]);
    std::vector<long double> out(p.vertexCount());
    long double acc = 0;
    for (std::size_t k = 0; k < p.tileCount(); ++k) {
        out[k] = acc;
        acc += step[p.classes()[k]];
        if (acc >= 1)
            acc -= 1;
    }
    out[p.tileCount()] = acc;
    return out;
}

double chordalDiameter(std::vector<long double> turns)
{
    if (turns.size() < 2)
        return 0.0;
    for (auto& t : turns)
        t -= std::floor(t);
    std::sort(turns.begin(), turns.end());
    // Largest pairwise circular separation: partner nearest the antipode.
    long double best = 0;
    const std::size_t n = turns.size();
    for (std::size_t i = 0; i < n; ++i) {
        long double target = turns[i] + 0.5L;
        if (target >= 1)
            target -= 1;
        auto it = std::lower_bound(turns.begin(), turns.end(), target);
        for (int s = 0; s < 2; ++s) {
            std::size_t j = it == turns.end() ? 0 : static_cast<std::size_t>(it - turns.begin());
            if (s == 1)
                j = (j + n - 1) % n;
            long double d = std::fabs(turns[j] - turns[i]);
            d = std::min(d, 1 - d);
            best = std::max(best, d);
        }
    }
    return static_cast<double>(2 * std::sin(std::numbers::pi_v<long double> * best));
}

PhaseDefectReport phaseDefect(const geometry::Patch& p, const FieldElement& beta, int radius)
{
    if (radius < 0)
        throw DomainError("collar radius must be >= 0");
    PhaseDefectReport r;
    r.radius = radius;
    const auto turns = phaseTurns(p, beta);
    const Word& w = p.word();
    const std::size_t R = static_cast<std::size_t>(radius);
    std::map<Word, std::vector<long double>> groups;
    for (std::size_t v = R; v + R <= w.size(); ++v) {
        Word collar(w.begin() + static_cast<long>(v - R), w.begin() + static_cast<long>(v + R));
        groups[collar].push_back(turns[v]);
    }
    bool repeated = false;
    for (auto& [collar, t] : groups) {
        repeated = repeated || t.size() > 1;
        CollarClass c{collar, t.size(), chordalDiameter(t)};
        if (c.diameter > r.worstDiameter) {
            r.worstDiameter = c.diameter;
            r.worstClass = r.classes.size();
        }
        r.classes.push_back(std::move(c));
    }
    r.degenerate = !repeated;
    return r;
}

} // namespace aperiodic::meyer
