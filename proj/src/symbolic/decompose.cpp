#include "aperiodic/symbolic/decompose.hpp"

#include <algorithm>
#include <cstdint>

#include "aperiodic/error.hpp"

namespace aperiodic::symbolic {

DesubstitutionResult desubstituteFibonacci(const Word& w)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > kB)
            throw LanguageError("letter outside {a, b} in a Fibonacci word");
        if (i + 1 < w.size() && w[i] == kB && w[i + 1] == kB)
            throw LanguageError("factor bb at position " + std::to_string(i));
        if (i + 2 < w.size() && w[i] == kA && w[i + 1] == kA && w[i + 2] == kA)
            throw LanguageError("factor aaa at position " + std::to_string(i));
    }
    DesubstitutionResult r;
    std::size_t i = 0;
    if (!w.empty() && w[0] == kB) {
        r.preimage.push_back(kA);
        r.offset = 1;
        i = 1;
    }
    while (i < w.size()) {
        if (i + 1 < w.size() && w[i + 1] == kB) {
            r.preimage.push_back(kA);
            i += 2;
        } else {
            r.trailingAmbiguous = i + 1 == w.size();
            r.preimage.push_back(kB);
            i += 1;
        }
    }
    return r;
}

namespace {

struct Item {
    std::uint32_t off = 0;
    std::uint32_t len = 0;
    // Child index range in the previous level.
    std::uint32_t cb = 0;
    std::uint32_t ce = 0;
    Letter type = kA;
    bool ambiguous = false;
};

using Items = std::vector<Item>;

bool bLike(const Item& x)
{
    return x.type != kA;
}

Item single(const Item& x, Letter type)
{
    return Item{x.off, x.len, x.cb, x.ce, type, false};
}

Item merge(const Item& x, const Item& y, Letter type)
{
    return Item{x.off, x.len + y.len, x.cb, y.ce, type, false};
}

Items lift(const Items& in, std::size_t begin, std::size_t end)
{
    Items out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        Item x = in[i];
        x.cb = static_cast<std::uint32_t>(i);
        x.ce = static_cast<std::uint32_t>(i + 1);
        out.push_back(x);
    }
    return out;
}

// One inverse step of a -> ab, b -> a. Anything other than `a` counts as b.
// The input is any concatenation of images, so only "bb" is rejected here.
Items fibonacciStep(const Items& in, bool leftKnown, bool rightKnown)
{
    Items out;
    out.reserve(in.size() / 2 + 1);
    std::size_t i = 0;
    const std::size_t n = in.size();
    if (n > 0 && bLike(in[0])) {
        if (leftKnown)
            throw LanguageError("aligned segment starts with b at offset " + std::to_string(in[0].off));
        i = 1;
    }
    while (i < n) {
        if (bLike(in[i]))
            throw LanguageError("factor bb at offset " + std::to_string(in[i].off));
        if (i + 1 < n && bLike(in[i + 1])) {
            out.push_back(merge(in[i], in[i + 1], kA));
            i += 2;
        } else if (i + 1 < n) {
            out.push_back(single(in[i], kB));
            i += 1;
        } else {
            if (rightKnown)
                out.push_back(single(in[i], kB));
            i += 1;
        }
    }
    return out;
}

Items invertPower(Items seq, long steps, bool leftKnown, bool rightKnown)
{
    for (long s = 0; s < steps && !seq.empty(); ++s)
        seq = fibonacciStep(seq, leftKnown, rightKnown);
    return seq;
}

bool collapsedOdd(const ScrambleSchedule& s, int level)
{
    return level % 2 == 1 && algebra::fibonacci(s.delta(level) - 1) < 2;
}

class Grouper {
public:
    Grouper(const FusionRule& f, Alignment align) : f_(f), align_(align) {}

    Items group(Items& children, int level) const
    {
        bool lk = level <= align_.left;
        bool rk = level <= align_.right;
        if (f_.kind() == RuleKind::Fibonacci)
            return fibonacciStep(lift(children, 0, children.size()), lk, rk);
        if (level % 2 == 1)
            return groupOdd(children, level, lk, rk);
        return groupEven(children, level, lk, rk);
    }

private:
    Items groupOdd(const Items& in, int level, bool lk, bool rk) const
    {
        for (const auto& x : in)
            if (x.type == kThird && !x.ambiguous)
                throw LanguageError("germ superletter of level " + std::to_string(level - 1) +
                                    " cannot occur inside a larger superletter");
        const long d = f_.schedule().delta(level);
        if (collapsedOdd(f_.schedule(), level)) {
            Items out = invertPower(lift(in, 0, in.size()), d, lk, rk);
            for (auto& x : out)
                x.ambiguous = x.type == kB;
            return out;
        }
        const std::size_t F = algebra::fibonacci(d).get_ui();
        const std::size_t G = algebra::fibonacci(d - 1).get_ui();
        const std::size_t n = in.size();

        Items out;
        std::size_t limit = n;
        if (!rk && F >= 3) {
            while (limit > 0 && in[limit - 1].type == kA)
                --limit;
        }
        std::size_t segStart = 0;
        bool segLeftKnown = lk;
        auto flush = [&](std::size_t end, bool rightKnown) {
            Items part = invertPower(lift(in, segStart, end), d, segLeftKnown, rightKnown);
            out.insert(out.end(), part.begin(), part.end());
        };

        std::size_t i = 0;
        while (i < limit) {
            if (in[i].type == kA) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < limit && in[j].type != kA)
                ++j;
            const std::size_t runLen = j - i;
            if (runLen == 1) {
                i = j;
                continue;
            }
            std::size_t aStart = i;
            while (aStart > segStart && in[aStart - 1].type == kA)
                --aStart;
            const std::size_t aLen = i - aStart;
            const bool atLeft = aStart == 0 && segStart == 0 && !lk;
            const bool atRight = j == n && !rk;
            if (runLen > G)
                throw LanguageError("b-run of length " + std::to_string(runLen) + " exceeds the germ block at offset " +
                                    std::to_string(in[i].off));
            if (runLen == G && aLen >= F) {
                std::size_t germStart = i - F;
                flush(germStart, true);
                Item g{in[germStart].off, 0, static_cast<std::uint32_t>(germStart), static_cast<std::uint32_t>(j),
                       kThird, false};
                for (std::size_t k = germStart; k < j; ++k)
                    g.len += in[k].len;
                out.push_back(g);
                segStart = j;
                segLeftKnown = true;
            } else if (atLeft) {
                // Cut-off germ at the left end.
                segStart = j;
                segLeftKnown = true;
            } else if (atRight && runLen < G) {
                limit = aStart;
                break;
            } else {
                throw LanguageError("malformed germ block at offset " + std::to_string(in[i].off));
            }
            i = j;
        }
        if (segStart < limit)
            flush(limit, limit == n ? rk : false);
        return out;
    }

    Items groupEven(Items& in, int level, bool lk, bool rk) const
    {
        const long d = f_.schedule().delta(level);
        const std::size_t F = algebra::fibonacci(d).get_ui();
        const std::size_t G = algebra::fibonacci(d - 1).get_ui();
        if (lk && rk && d >= 3 && in.size() == F + G) {
            bool sorted = true;
            for (std::size_t k = 0; k < in.size() && sorted; ++k)
                sorted = (in[k].type == kA) == (k < F) && in[k].type != kThird;
            if (sorted) {
                Item g{in.front().off, 0, 0, static_cast<std::uint32_t>(in.size()), kThird, false};
                for (const auto& x : in)
                    g.len += x.len;
                return Items{g};
            }
        }
        Items out = invertPower(lift(in, 0, in.size()), d, lk, rk);
        const bool resolve = collapsedOdd(f_.schedule(), level - 1);
        for (const auto& p : out) {
            std::size_t lastB = p.ce;
            std::size_t germs = 0, germAt = p.ce;
            for (std::size_t k = p.cb; k < p.ce; ++k) {
                if (bLike(in[k]))
                    lastB = k;
                if (in[k].type == kThird) {
                    ++germs;
                    germAt = k;
                }
            }
            if (resolve) {
                if (lastB == p.ce)
                    throw LanguageError("level-" + std::to_string(level) + " superletter without a b-like child");
                for (std::size_t k = p.cb; k < p.ce; ++k)
                    in[k].ambiguous = false;
                in[lastB].type = kThird;
            } else if (germs != 1 || germAt != lastB) {
                throw LanguageError("germ superletter misplaced inside the level-" + std::to_string(level) +
                                    " superletter at offset " + std::to_string(p.off));
            }
        }
        return out;
    }

    const FusionRule& f_;
    Alignment align_;
};

} // namespace

Decomposition decompose(const FusionRule& f, const Word& w, int level, Alignment align)
{
    if (f.kind() == RuleKind::Substitution)
        throw DomainError("decompose is implemented for the Fibonacci and scrambled rules only");
    if (level < 0 || level > f.maxLevel())
        throw DomainError("level " + std::to_string(level) + " outside the rule");
    if (w.size() > std::numeric_limits<std::uint32_t>::max() / 2)
        throw BudgetError("word too long to decompose", BigInt(static_cast<unsigned long>(w.size())));

    Items items;
    items.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= f.alphabet().size() || (level > 0 && w[i] > kB))
            throw LanguageError("letter outside {a, b} at offset " + std::to_string(i));
        items.push_back(Item{static_cast<std::uint32_t>(i), 1, static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(i + 1), w[i], false});
    }

    Grouper grouper(f, align);
    for (int k = 1; k <= level; ++k)
        items = grouper.group(items, k);

    if (f.kind() == RuleKind::Scrambled && collapsedOdd(f.schedule(), level) && level + 1 <= f.maxLevel()) {
        bool anyAmbiguous = std::any_of(items.begin(), items.end(), [](const Item& x) { return x.ambiguous; });
        if (anyAmbiguous) {
            Items copy = items;
            try {
                Items parents = grouper.group(copy, level + 1);
                // A b-type parent could itself be the (identical) germ superletter,
                // which would flip its last child. Only a complete part one level
                // further up rules that out.
                std::vector<bool> settled(parents.size());
                for (std::size_t p = 0; p < parents.size(); ++p)
                    settled[p] = parents[p].type == kA && !parents[p].ambiguous;
                if (level + 2 <= f.maxLevel() && std::find(settled.begin(), settled.end(), false) != settled.end()) {
                    try {
                        for (const auto& g : grouper.group(parents, level + 2))
                            for (std::size_t k = g.cb; k < g.ce; ++k)
                                settled[k] = true;
                    } catch (const LanguageError&) {
                    }
                }
                for (std::size_t p = 0; p < parents.size(); ++p)
                    if (!settled[p])
                        for (std::size_t k = parents[p].cb; k < parents[p].ce; ++k)
                            copy[k] = items[k];
                items = std::move(copy);
            } catch (const LanguageError&) {
                // Context does not decide; keep the parts marked ambiguous.
            }
        }
    }

    Decomposition d;
    d.level = level;
    d.parts.reserve(items.size());
    for (const auto& x : items)
        d.parts.push_back(DecompositionPart{x.type, x.off, x.len, x.ambiguous});
    std::size_t lead = items.empty() ? w.size() : items.front().off;
    std::size_t tail = items.empty() ? w.size() : static_cast<std::size_t>(items.back().off) + items.back().len;
    if (lead > 0)
        d.leadingPartial = Span{0, lead};
    if (tail < w.size())
        d.trailingPartial = Span{tail, w.size() - tail};

    for (const auto& p : d.parts) {
        auto expected = f.superletter(level, p.type);
        if (expected->size() != p.length ||
            !std::equal(expected->begin(), expected->end(), w.begin() + static_cast<long>(p.offset)))
            throw LanguageError("re-expansion of the part at offset " + std::to_string(p.offset) +
                                " does not reproduce the word");
    }
    d.verified = true;
    return d;
}

UnscrambleResult unscramble(const FusionRule& f, const Decomposition& d)
{
    if (f.kind() != RuleKind::Scrambled)
        throw DomainError("unscramble needs the scrambled rule");
    long n = f.schedule().N(d.level);
    Morphism fib = Morphism({Word{kA, kB}, Word{kA}}).power(n, f.budget());
    UnscrambleResult r;
    for (const auto& p : d.parts) {
        Letter t = p.type;
        if (t == kThird) {
            ++r.germParts;
            t = kB;
        }
        const Word& im = fib.image(t);
        r.word.insert(r.word.end(), im.begin(), im.end());
    }
    if (d.leadingPartial)
        r.trimmedLeading = d.leadingPartial->length;
    if (d.trailingPartial)
        r.trimmedTrailing = d.trailingPartial->length;
    return r;
}

algebra::Rational germFrequency(const FusionRule& f, const Word& w, int kappa, Alignment align)
{
    if (kappa % 2 == 0)
        throw DomainError("germFrequency needs an odd level");
    if (w.empty())
        return 0;
    auto d = decompose(f, w, kappa, align);
    long germs = std::count_if(d.parts.begin(), d.parts.end(), [](const auto& p) { return p.type == kThird; });
    algebra::Rational r(germs, static_cast<unsigned long>(w.size()));
    r.canonicalize();
    return r;
}

} // namespace aperiodic::symbolic
