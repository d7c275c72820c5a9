#include "aperiodic/geometry/deformation.hpp"

#include <algorithm>
#include <cmath>

#include "aperiodic/error.hpp"

namespace aperiodic::geometry {

DeformationRule DeformationRule::fromLengths(const LengthAssignment& lengths)
{
    DeformationRule r;
    for (std::size_t x = 0; x < lengths.lengths().size(); ++x)
        r.table.emplace(Word{static_cast<Letter>(x)}, lengths.lengths()[x]);
    return r;
}

namespace {

// Length for a collar cut off at the ends: the common value of all table
// entries that agree with the visible letters, else the boundary table.
std::optional<FieldElement> settleTruncated(const DeformationRule& rule, const Word& w, std::size_t k)
{
    const long R = rule.radius;
    const long n = static_cast<long>(w.size());
    const long pos = static_cast<long>(k);
    std::optional<FieldElement> value;
    bool consistent = true;
    for (const auto& [collar, len] : rule.table) {
        bool match = true;
        for (long o = -R; o <= R && match; ++o) {
            long p = pos + o;
            if (p < 0 || p >= n)
                continue;
            match = collar[static_cast<std::size_t>(o + R)] == w[static_cast<std::size_t>(p)];
        }
        if (!match)
            continue;
        if (!value)
            value = len;
        else if (*value != len)
            consistent = false;
    }
    if (value && consistent)
        return value;
    if (rule.boundary)
        return rule.boundary->length(w[k]);
    return std::nullopt;
}

} // namespace

DeformedPatch applyDeformation(const Word& w, const DeformationRule& rule, const FieldElement& anchor)
{
    if (rule.radius < 0)
        throw DomainError("collar radius must be >= 0");
    for (const auto& [collar, len] : rule.table)
        if (collar.size() != static_cast<std::size_t>(2 * rule.radius + 1))
            throw ConstraintError("collar of length " + std::to_string(collar.size()) + " in a radius-" +
                                  std::to_string(rule.radius) + " rule");

    const std::size_t R = static_cast<std::size_t>(rule.radius);
    std::map<Word, std::uint32_t> classOf;
    std::vector<Word> collars;
    std::vector<FieldElement> lengths;
    std::vector<std::uint32_t> classes(w.size());
    std::vector<std::size_t> truncated;
    for (std::size_t k = 0; k < w.size(); ++k) {
        bool cut = k < R || k + R >= w.size();
        std::size_t lo = k < R ? 0 : k - R;
        std::size_t hi = std::min(w.size(), k + R + 1);
        Word collar(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
        if (cut) {
            truncated.push_back(k);
            // Truncated collars get their own classes, keyed with a marker for the cut side.
            collar.insert(collar.begin(), static_cast<Letter>(k < R ? 0xFE : 0xFD));
            collar.push_back(static_cast<Letter>(k + R >= w.size() ? 0xFE : 0xFD));
        }
        auto it = classOf.find(collar);
        if (it == classOf.end()) {
            std::optional<FieldElement> len;
            if (cut) {
                len = settleTruncated(rule, w, k);
            } else {
                auto t = rule.table.find(collar);
                if (t != rule.table.end())
                    len = t->second;
            }
            if (!len) {
                std::string shown;
                for (std::size_t p = lo; p < hi; ++p)
                    shown += std::to_string(w[p]) + (p + 1 < hi ? "," : "");
                throw TotalityError("deformation rule has no length for the collar [" + shown + "] at tile " +
                                    std::to_string(k));
            }
            it = classOf.emplace(collar, static_cast<std::uint32_t>(lengths.size())).first;
            collars.push_back(collar);
            lengths.push_back(*len);
        }
        classes[k] = it->second;
    }
    return DeformedPatch{Patch(w, std::move(classes), std::move(lengths), anchor), std::move(collars),
                         std::move(truncated)};
}

FieldElement DisplacementSeries::exact(std::size_t k) const
{
    if (k > classes.size())
        throw DomainError("vertex index out of range");
    std::vector<unsigned long> counts(deltas.size());
    for (std::size_t i = 0; i < k; ++i)
        ++counts[classes[i]];
    FieldElement total(0L);
    for (std::size_t c = 0; c < deltas.size(); ++c)
        if (counts[c] != 0)
            total += deltas[c] * FieldElement(Rational(algebra::BigInt(counts[c])));
    return total;
}

namespace {

DisplacementSeries buildSeries(std::vector<std::uint32_t> classes, std::vector<FieldElement> deltas)
{
    DisplacementSeries s;
    s.classes = std::move(classes);
    s.deltas = std::move(deltas);
    std::vector<double> d;
    for (const auto& x : s.deltas)
        d.push_back(approxValue(x));
    std::vector<std::uint64_t> counts(d.size());
    s.values.resize(s.classes.size() + 1);
    s.runningSup.resize(s.classes.size() + 1);
    double sup = 0.0;
    for (std::size_t k = 0; k <= s.classes.size(); ++k) {
        long double v = 0;
        for (std::size_t c = 0; c < d.size(); ++c)
            v += static_cast<long double>(counts[c]) * d[c];
        s.values[k] = static_cast<double>(v);
        sup = std::max(sup, std::fabs(s.values[k]));
        s.runningSup[k] = sup;
        if (k < s.classes.size())
            ++counts[s.classes[k]];
    }
    s.supAbs = sup;
    std::size_t half = s.classes.size() / 2;
    s.stabilized =
        !s.classes.empty() && std::fabs(s.runningSup.back() - s.runningSup[half]) < kStabilizationTolerance;
    return s;
}

} // namespace

DisplacementSeries displacementCochain(const Word& w, const LengthAssignment& before, const LengthAssignment& after)
{
    if (before.lengths().size() != after.lengths().size())
        throw ConstraintError("length systems cover different alphabets");
    std::vector<FieldElement> deltas;
    for (std::size_t x = 0; x < before.lengths().size(); ++x)
        deltas.push_back(after.lengths()[x] - before.lengths()[x]);
    std::vector<std::uint32_t> classes(w.begin(), w.end());
    return buildSeries(std::move(classes), std::move(deltas));
}

DisplacementSeries displacementCochain(const Word& w, const LengthAssignment& before, const DeformationRule& after)
{
    auto deformed = applyDeformation(w, after);
    // Each collar class fixes its centre letter, hence the old length.
    const std::size_t classCount = deformed.classCollars.size();
    std::vector<int> centre(classCount, -1);
    for (std::size_t k = 0; k < w.size(); ++k)
        if (centre[deformed.patch.classes()[k]] < 0)
            centre[deformed.patch.classes()[k]] = w[k];
    std::vector<FieldElement> deltas;
    for (std::size_t c = 0; c < classCount; ++c)
        deltas.push_back(deformed.patch.classLengths()[c] - before.length(static_cast<Letter>(centre[c])));
    return buildSeries(deformed.patch.classes(), std::move(deltas));
}

} // namespace aperiodic::geometry
