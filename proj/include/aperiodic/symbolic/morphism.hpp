#pragma once

#include <vector>

#include "aperiodic/algebra/matrix.hpp"
#include "aperiodic/symbolic/word.hpp"

namespace aperiodic::symbolic {

/// Default cap on materialized words.
inline constexpr std::size_t kExpansionBudget = 10'000'000;

/// Non-erasing morphism on letters 0..n-1; images()[x] is the image of x.
class Morphism {
public:
    Morphism() = default;
    explicit Morphism(std::vector<Word> images);
    static Morphism identity(std::size_t n);

    std::size_t domainSize() const { return images_.size(); }
    const Word& image(Letter x) const;
    const std::vector<Word>& images() const { return images_; }

    /// Throws DomainError on letters outside the domain.
    Word apply(const Word& w) const;
    /// (this o inner)(x) = this(inner(x)).
    Morphism compose(const Morphism& inner) const;
    /// k-fold composition. Throws DomainError for k < 0 and BudgetError when an
    /// image would exceed `budget` letters.
    Morphism power(long k, std::size_t budget = kExpansionBudget) const;

    friend bool operator==(const Morphism& a, const Morphism& b) { return a.images_ == b.images_; }

private:
    std::vector<Word> images_;
};

/// a -> ab, b -> a.
const Morphism& fibonacciMorphism();
/// a -> abca, b -> abb, c -> ac.
const Morphism& abcMorphism();

/// Row x is the population of the image of x.
algebra::IntMatrix substitutionMatrix(const Morphism& m);

/// Length of the k-th power images computed from the matrix alone.
std::vector<BigInt> powerLengths(const Morphism& m, long k);

} // namespace aperiodic::symbolic
