#include "aperiodic/geometry/return_vectors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "aperiodic/error.hpp"
#include "aperiodic/geometry/patch.hpp"

namespace aperiodic::geometry {

FieldElement superletterLength(const symbolic::FusionRule& f, const LengthAssignment& lengths, int level, Letter x)
{
    return lengths.lengthOf(f.superletterPopulation(level, x));
}

namespace {

constexpr long kFallbackMultiples = 64;

algebra::BigInt partCount(const symbolic::FusionRule& f, int n, int ambient, Letter x)
{
    const std::size_t k = f.alphabet().size();
    std::vector<algebra::BigInt> row(k);
    row[x] = 1;
    for (int level = ambient; level > n; --level) {
        auto c = f.countsAt(level);
        std::vector<algebra::BigInt> next(k);
        for (std::size_t y = 0; y < k; ++y)
            if (row[y] != 0)
                for (std::size_t z = 0; z < k; ++z)
                    next[z] += row[y] * c.at(y, z);
        row = std::move(next);
    }
    algebra::BigInt total = 0;
    for (const auto& v : row)
        total += v;
    return total;
}

bool occursInTilings(const symbolic::FusionRule& f, int level, Letter x)
{
    // Even-level germ superletters never sit inside larger ones.
    if (f.kind() == symbolic::RuleKind::Scrambled && f.alphabet().isGerm(x))
        return level % 2 == 1;
    return true;
}

void addVector(std::vector<ReturnVector>& out, std::set<std::string>& seen, FieldElement v, int n, int ambient,
               Letter type)
{
    if (!seen.insert(v.key()).second)
        return;
    double av = approxValue(v);
    out.push_back(ReturnVector{std::move(v), av, n, ambient, type});
}

} // namespace

Word typeSequence(const symbolic::FusionRule& f, int n, int ambient, Letter x, std::size_t budget)
{
    auto count = partCount(f, n, ambient, x);
    if (count > budget)
        throw BudgetError("expansion too large: S_" + std::to_string(ambient) + " has " + count.get_str() +
                              " level-" + std::to_string(n) + " parts",
                          count);
    Word seq{x};
    for (int level = ambient; level > n; --level)
        seq = f.morphismAt(level).apply(seq);
    return seq;
}

ReturnVectorSet returnVectors(const symbolic::FusionRule& f, const LengthAssignment& lengths, int n, int ambient,
                              std::size_t partBudget)
{
    if (n < 0 || ambient <= n)
        throw DomainError("returnVectors needs 0 <= n < ambient");
    if (ambient > f.maxLevel())
        throw DomainError("ambient level beyond the rule");
    const std::size_t k = f.alphabet().size();
    std::vector<FieldElement> blockLength;
    for (std::size_t y = 0; y < k; ++y)
        blockLength.push_back(superletterLength(f, lengths, n, static_cast<Letter>(y)));

    ReturnVectorSet result;
    std::set<std::string> seen;
    std::map<std::pair<std::vector<std::uint64_t>, Letter>, bool> keys;
    for (std::size_t xi = 0; xi < k; ++xi) {
        Letter x = static_cast<Letter>(xi);
        if (!occursInTilings(f, ambient, x))
            continue;
        Word seq;
        try {
            seq = typeSequence(f, n, ambient, x, partBudget);
        } catch (const BudgetError&) {
            result.symbolicFallback = true;
            continue;
        }
        result.partsExamined += seq.size();
        std::vector<std::uint64_t> counts(k);
        // Small alphabets pack (type, counts) into one word.
        const bool packed = k <= 3 && seq.size() < (1u << 16);
        std::unordered_set<std::uint64_t> packedKeys;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                ++counts[seq[j - 1]];
                if (seq[j] != seq[i])
                    continue;
                if (packed) {
                    std::uint64_t key = seq[i];
                    for (std::size_t y = 0; y < k; ++y)
                        key |= counts[y] << (8 + 16 * y);
                    packedKeys.insert(key);
                } else {
                    keys.emplace(std::make_pair(counts, seq[i]), true);
                }
            }
        }
        for (auto key : packedKeys) {
            std::vector<std::uint64_t> c(k);
            for (std::size_t y = 0; y < k; ++y)
                c[y] = (key >> (8 + 16 * y)) & 0xffff;
            keys.emplace(std::make_pair(std::move(c), static_cast<Letter>(key & 0xff)), true);
        }
    }
    for (const auto& [key, unused] : keys) {
        (void)unused;
        FieldElement v(lengths.field(), Rational(0));
        for (std::size_t y = 0; y < k; ++y)
            if (key.first[y] != 0)
                v += blockLength[y] * FieldElement(Rational(algebra::BigInt(static_cast<unsigned long>(key.first[y]))));
        addVector(result.vectors, seen, std::move(v), n, ambient, key.second);
    }

    if (result.symbolicFallback && ambient == n + 1) {
        const FieldElement& la = blockLength[symbolic::kA];
        const FieldElement& lb = blockLength[symbolic::kB];
        addVector(result.vectors, seen, la, n, ambient, symbolic::kA);
        addVector(result.vectors, seen, la + lb, n, ambient, symbolic::kA);
        addVector(result.vectors, seen, la + la + lb, n, ambient, symbolic::kB);
        if (f.kind() == symbolic::RuleKind::Scrambled && ambient % 2 == 1) {
            // Multiples inside the germ blocks; long blocks are cut at kFallbackMultiples.
            long d = std::min(f.schedule().delta(ambient), 40L);
            long runA = std::min(algebra::fibonacci(d).get_si(), kFallbackMultiples + 1);
            long runB = std::min(algebra::fibonacci(d - 1).get_si(), kFallbackMultiples + 1);
            for (long m = 1; m < runA; ++m)
                addVector(result.vectors, seen, la * FieldElement(m), n, ambient, symbolic::kA);
            for (long m = 1; m < runB; ++m)
                addVector(result.vectors, seen, lb * FieldElement(m), n, ambient, symbolic::kB);
        }
    }

    std::sort(result.vectors.begin(), result.vectors.end(), [](const ReturnVector& a, const ReturnVector& b) {
        return lessExact(a.value, a.approx, b.value, b.approx);
    });
    return result;
}

} // namespace aperiodic::geometry
