#include "aperiodic/meyer/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "aperiodic/algebra/matrix.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic::meyer {

PrefixCounts::PrefixCounts(const Word& w, std::size_t alphabetSize)
    : n_(w.size()), k_(alphabetSize), data_((w.size() + 1) * alphabetSize)
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (w[i] >= k_)
            throw DomainError("letter outside the alphabet");
        std::copy_n(&data_[i * k_], k_, &data_[(i + 1) * k_]);
        ++data_[(i + 1) * k_ + w[i]];
    }
}

FactorPopulations PrefixCounts::factorPopulations(std::size_t m) const
{
    if (m == 0 || m > n_)
        throw DomainError("factor length out of range");
    FactorPopulations out;
    out.length = m;
    out.dimension = k_;
    const std::size_t starts = n_ - m + 1;
    if (k_ == 1) {
        out.rows.push_back(static_cast<std::uint32_t>(m));
        return out;
    }
    // The last coordinate is m minus the others, so only k-1 are tracked.
    const std::size_t free = k_ - 1;
    std::vector<std::uint32_t> lo(free, UINT32_MAX), hi(free, 0);
    for (std::size_t i = 0; i < starts; ++i)
        for (std::size_t y = 0; y < free; ++y) {
            std::uint32_t c = at(i + m, y) - at(i, y);
            lo[y] = std::min(lo[y], c);
            hi[y] = std::max(hi[y], c);
        }
    std::size_t cells = 1;
    bool dense = true;
    for (std::size_t y = 0; y < free && dense; ++y) {
        cells *= hi[y] - lo[y] + 1;
        dense = cells <= (std::size_t{1} << 24);
    }
    if (dense) {
        std::vector<std::uint8_t> seen(cells);
        for (std::size_t i = 0; i < starts; ++i) {
            std::size_t cell = 0;
            for (std::size_t y = 0; y < free; ++y)
                cell = cell * (hi[y] - lo[y] + 1) + (at(i + m, y) - at(i, y) - lo[y]);
            seen[cell] = 1;
        }
        std::vector<std::uint32_t> row(k_);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            if (!seen[cell])
                continue;
            std::size_t rest = cell;
            std::uint32_t used = 0;
            for (std::size_t y = free; y-- > 0;) {
                std::size_t span = hi[y] - lo[y] + 1;
                row[y] = lo[y] + static_cast<std::uint32_t>(rest % span);
                rest /= span;
                used += row[y];
            }
            row[free] = static_cast<std::uint32_t>(m) - used;
            out.rows.insert(out.rows.end(), row.begin(), row.end());
        }
        return out;
    }
    std::set<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> row(k_);
    for (std::size_t i = 0; i < starts; ++i) {
        for (std::size_t y = 0; y < k_; ++y)
            row[y] = at(i + m, y) - at(i, y);
        rows.insert(row);
    }
    for (const auto& r : rows)
        out.rows.insert(out.rows.end(), r.begin(), r.end());
    return out;
}

namespace {

FieldElement exactValue(const LengthAssignment& lengths, const std::uint32_t* row, std::size_t k)
{
    std::vector<algebra::BigInt> counts(k);
    for (std::size_t y = 0; y < k; ++y)
        counts[y] = static_cast<unsigned long>(row[y]);
    return lengths.lengthOf(counts);
}

double approxRow(const std::vector<double>& approx, const std::uint32_t* row, std::size_t k)
{
    long double v = 0;
    for (std::size_t y = 0; y < k; ++y)
        v += static_cast<long double>(row[y]) * approx[y];
    return static_cast<double>(v);
}

void checkScales(const std::vector<std::size_t>& scales, std::size_t wordLength)
{
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (scales[i] == 0 || scales[i] > wordLength)
            throw DomainError("scale " + std::to_string(scales[i]) + " outside 1.." + std::to_string(wordLength));
        if (i > 0 && scales[i] <= scales[i - 1])
            throw DomainError("scales must be increasing");
    }
}

} // namespace

GapProfile gapProfile(const Word& w, const LengthAssignment& lengths, const std::vector<std::size_t>& scales)
{
    const std::size_t k = lengths.lengths().size();
    checkScales(scales, w.size());
    GapProfile profile;
    if (scales.empty())
        return profile;
    PrefixCounts prefix(w, k);
    const auto& approx = lengths.approxAll();

    // Factors of different lengths never share a population, so the union
    // over lengths <= n is a plain concatenation.
    std::vector<std::uint32_t> rows;
    std::vector<std::pair<double, std::size_t>> values;
    std::size_t next = 0;
    for (std::size_t m = 1; m <= scales.back(); ++m) {
        auto pops = prefix.factorPopulations(m);
        for (std::size_t r = 0; r < pops.size(); ++r) {
            values.emplace_back(approxRow(approx, &pops.rows[r * k], k), rows.size() / k);
            rows.insert(rows.end(), pops.rows.begin() + static_cast<long>(r * k),
                        pops.rows.begin() + static_cast<long>((r + 1) * k));
        }
        if (m != scales[next])
            continue;

        std::sort(values.begin(), values.end());
        GapEntry e;
        e.scale = m;
        e.gap = FieldElement(lengths.field(), algebra::Rational(0));
        std::size_t distinct = values.empty() ? 0 : 1;
        double best = INFINITY;
        std::size_t bestLo = 0, bestHi = 0;
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            double diff = values[i + 1].first - values[i].first;
            double tol = 1e-9 * std::max(1.0, std::fabs(values[i + 1].first));
            if (diff <= tol) {
                FieldElement d = exactValue(lengths, &rows[values[i + 1].second * k], k) -
                                 exactValue(lengths, &rows[values[i].second * k], k);
                if (d.isZero())
                    continue;
            }
            ++distinct;
            if (diff < best) {
                best = diff;
                bestLo = values[i].second;
                bestHi = values[i + 1].second;
            }
        }
        if (distinct > 1) {
            FieldElement d = exactValue(lengths, &rows[bestHi * k], k) - exactValue(lengths, &rows[bestLo * k], k);
            e.gap = d.sign() < 0 ? -d : d;
            e.gapApprox = geometry::approxValue(e.gap);
        }
        e.distinctValues = distinct;
        profile.entries.push_back(std::move(e));
        ++next;
    }
    return profile;
}

PowerFit fitPowerLaw(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size())
        throw DomainError("fit needs paired data");
    PowerFit fit;
    const std::size_t n = x.size();
    if (n < 2)
        return fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0 && y[i] > 0))
            throw DomainError("log-log fit needs positive data");
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0)
        return fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.exponent * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::log(y[i]) - (fit.intercept + fit.exponent * std::log(x[i]));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

SpacingGrowth spacingGrowth(const Word& w, const LengthAssignment& lengths, const std::vector<std::size_t>& scales)
{
    const std::size_t k = lengths.lengths().size();
    checkScales(scales, w.size());
    SpacingGrowth g;
    g.lengthsIndependent = algebra::rationalIndependence(lengths.lengths());
    if (!g.lengthsIndependent)
        g.warnings.push_back("tile lengths are rationally dependent; counts are of population vectors, "
                             "distinct spacings may be fewer");
    PrefixCounts prefix(w, k);
    std::vector<double> xs, ys;
    for (auto n : scales) {
        auto pops = prefix.factorPopulations(n);
        g.counts.push_back({n, pops.size()});
        xs.push_back(static_cast<double>(n));
        ys.push_back(static_cast<double>(pops.size()));
    }
    g.fit = fitPowerLaw(xs, ys);
    return g;
}

} // namespace aperiodic::meyer
