#include "aperiodic/symbolic/morphism.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic::symbolic {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images))
{
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x].empty())
            throw ConstraintError("morphism must be non-erasing (letter " + std::to_string(x) + ")");
        for (Letter y : images_[x])
            if (y >= images_.size())
                throw ConstraintError("morphism image uses a letter outside its domain");
    }
}

Morphism Morphism::identity(std::size_t n)
{
    std::vector<Word> im(n);
    for (std::size_t x = 0; x < n; ++x)
        im[x] = Word{static_cast<Letter>(x)};
    return Morphism(std::move(im));
}

const Word& Morphism::image(Letter x) const
{
    if (x >= images_.size())
        throw DomainError("letter " + std::to_string(x) + " outside the morphism domain");
    return images_[x];
}

Word Morphism::apply(const Word& w) const
{
    std::size_t total = 0;
    for (Letter x : w)
        total += image(x).size();
    Word out;
    out.reserve(total);
    for (Letter x : w) {
        const Word& im = images_[x];
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

Morphism Morphism::compose(const Morphism& inner) const
{
    std::vector<Word> im;
    im.reserve(inner.domainSize());
    for (const Word& w : inner.images_)
        im.push_back(apply(w));
    return Morphism(std::move(im));
}

std::vector<BigInt> powerLengths(const Morphism& m, long k)
{
    // Lengths of m^k(x): M^k applied to the all-ones vector.
    auto mat = substitutionMatrix(m);
    std::vector<BigInt> len(m.domainSize(), BigInt(1));
    for (long i = 0; i < k; ++i)
        len = mat.apply(len);
    return len;
}

Morphism Morphism::power(long k, std::size_t budget) const
{
    if (k < 0)
        throw DomainError("power needs k >= 0");
    auto lengths = powerLengths(*this, k);
    for (const auto& len : lengths)
        if (len > budget)
            throw BudgetError("expansion too large: image of length " + len.get_str() + " exceeds budget " +
                                  std::to_string(budget),
                              len);
    Morphism result = identity(domainSize());
    Morphism base = *this;
    while (k > 0) {
        if (k & 1)
            result = result.compose(base);
        k >>= 1;
        if (k > 0)
            base = base.compose(base);
    }
    return result;
}

const Morphism& fibonacciMorphism()
{
    static const Morphism m({Word{kA, kB}, Word{kA}});
    return m;
}

const Morphism& abcMorphism()
{
    static const Morphism m({Word{0, 1, 2, 0}, Word{0, 1, 1}, Word{0, 2}});
    return m;
}

algebra::IntMatrix substitutionMatrix(const Morphism& m)
{
    algebra::IntMatrix mat(m.domainSize());
    for (std::size_t x = 0; x < m.domainSize(); ++x)
        for (Letter y : m.images()[x])
            mat.at(x, y) += 1;
    return mat;
}

} // namespace aperiodic::symbolic
