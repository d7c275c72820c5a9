#include "aperiodic/geometry/patch.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "aperiodic/error.hpp"

namespace aperiodic::geometry {

Patch::Patch(Word word, std::vector<std::uint32_t> classes, std::vector<FieldElement> classLengths,
             FieldElement anchor)
    : word_(std::move(word)), classes_(std::move(classes)), classLengths_(std::move(classLengths)),
      anchor_(std::move(anchor))
{
    if (classes_.size() != word_.size())
        throw ConstraintError("one tile class per letter is required");
    field_ = anchor_.field();
    for (const auto& l : classLengths_)
        field_ = algebra::commonField(FieldElement(field_, Rational(0)), l);
    anchor_ = anchor_.in(field_);
    for (auto& l : classLengths_) {
        l = l.in(field_);
        if (l.sign() <= 0)
            throw ConstraintError("tile length is not positive: " + l.toString());
        classApprox_.push_back(approxValue(l));
    }
    for (auto c : classes_)
        if (c >= classLengths_.size())
            throw ConstraintError("tile class without a length");

    const std::size_t k = classLengths_.size();
    std::vector<std::uint64_t> counts(k);
    long double a0 = approxValue(anchor_);
    approx_.resize(word_.size() + 1);
    checkpoints_.reserve(word_.size() / kStride + 1);
    for (std::size_t i = 0; i <= word_.size(); ++i) {
        if (i % kStride == 0)
            checkpoints_.push_back(counts);
        long double pos = a0;
        for (std::size_t c = 0; c < k; ++c)
            pos += static_cast<long double>(counts[c]) * classApprox_[c];
        approx_[i] = static_cast<double>(pos);
        if (i < word_.size())
            ++counts[classes_[i]];
    }
}

std::vector<std::uint64_t> Patch::classCounts(std::size_t i, std::size_t j) const
{
    if (i > j || j > word_.size())
        throw DomainError("vertex range out of bounds");
    std::vector<std::uint64_t> counts(classLengths_.size());
    if (j - i <= 2 * kStride) {
        for (std::size_t t = i; t < j; ++t)
            ++counts[classes_[t]];
        return counts;
    }
    auto prefix = [&](std::size_t m) {
        std::vector<std::uint64_t> c = checkpoints_[m / kStride];
        for (std::size_t t = (m / kStride) * kStride; t < m; ++t)
            ++c[classes_[t]];
        return c;
    };
    auto hi = prefix(j), lo = prefix(i);
    for (std::size_t c = 0; c < counts.size(); ++c)
        counts[c] = hi[c] - lo[c];
    return counts;
}

FieldElement Patch::fromCounts(const std::vector<std::uint64_t>& counts) const
{
    FieldElement total(field_, Rational(0));
    for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c] != 0)
            total += classLengths_[c] * FieldElement(Rational(algebra::BigInt(static_cast<unsigned long>(counts[c]))));
    return total;
}

FieldElement Patch::difference(std::size_t i, std::size_t j) const
{
    return fromCounts(classCounts(i, j));
}

FieldElement Patch::position(std::size_t k) const
{
    return anchor_ + difference(0, k);
}

Patch suspend(const Word& w, const LengthAssignment& lengths, const FieldElement& anchor)
{
    std::vector<std::uint32_t> classes(w.begin(), w.end());
    for (auto c : classes)
        if (c >= lengths.lengths().size())
            throw DomainError("letter without a length");
    return Patch(w, std::move(classes), lengths.lengths(), anchor);
}

bool lessExact(const FieldElement& a, double av, const FieldElement& b, double bv)
{
    double scale = std::max({1.0, std::fabs(av), std::fabs(bv)});
    if (std::fabs(av - bv) > 1e-9 * scale)
        return av < bv;
    return a < b;
}

std::vector<FieldElement> differenceSet(const Patch& p, const FieldElement& window)
{
    if (window.sign() <= 0)
        throw DomainError("window must be positive");
    const double w = approxValue(window);
    const double slack = 1e-9 * std::max(1.0, w);
    const auto& pos = p.approxPositions();
    const std::size_t k = p.classLengths().size();

    std::map<std::vector<std::uint64_t>, bool> seen;
    std::vector<std::uint64_t> counts(k);
    for (std::size_t i = 0; i < p.tileCount(); ++i) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t j = i + 1; j < p.vertexCount() && pos[j] - pos[i] <= w + slack; ++j) {
            ++counts[p.classes()[j - 1]];
            seen.emplace(counts, true);
        }
    }

    std::vector<std::pair<FieldElement, double>> values;
    std::map<std::string, bool> exact;
    for (const auto& [c, unused] : seen) {
        (void)unused;
        FieldElement v = p.fromCounts(c);
        double av = approxValue(v);
        if (std::fabs(av - w) <= slack && window < v)
            continue;
        if (av > w + slack)
            continue;
        if (exact.emplace(v.key(), true).second)
            values.emplace_back(std::move(v), av);
    }
    std::sort(values.begin(), values.end(),
              [](const auto& x, const auto& y) { return lessExact(x.first, x.second, y.first, y.second); });
    std::vector<FieldElement> out;
    out.reserve(values.size());
    for (auto& v : values)
        out.push_back(std::move(v.first));
    return out;
}

} // namespace aperiodic::geometry
