#include "aperiodic/symbolic/fusion.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic::symbolic {

Word withFinalGerm(Word w)
{
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (*it == kB) {
            *it = kThird;
            return w;
        }
    throw ConstraintError("image has no letter b to turn into the germ");
}

Word sortedFibonacciImage(long k)
{
    BigInt na = fibonacciNumber(k), nb = fibonacciNumber(k - 1);
    if (na + nb > kExpansionBudget)
        throw BudgetError("expansion too large: sorted image of length " + BigInt(na + nb).get_str(), na + nb);
    Word w(na.get_ui(), kA);
    w.insert(w.end(), nb.get_ui(), kB);
    return w;
}

Morphism scrambledMorphism(const ScrambleSchedule& s, int level, std::size_t budget)
{
    s.validateAt(level);
    long d = s.delta(level);
    BigInt longest = fibonacciNumber(d + 2);
    if (longest > budget)
        throw BudgetError("expansion too large: level " + std::to_string(level) + " images have length " +
                              longest.get_str(),
                          longest);
    Morphism fib3({Word{kA, kB}, Word{kA}, Word{kThird}});
    Morphism p = fib3.power(d, budget);
    std::vector<Word> im = p.images();
    if (level % 2 == 0) {
        im[kA] = withFinalGerm(std::move(im[kA]));
        im[kB] = withFinalGerm(std::move(im[kB]));
    }
    im[kThird] = sortedFibonacciImage(d);
    return Morphism(std::move(im));
}

FusionRule::FusionRule(RuleKind kind, Alphabet alphabet, Morphism sigma, ScrambleSchedule schedule,
                       std::size_t budget)
    : kind_(kind),
      alphabet_(std::move(alphabet)),
      sigma_(std::move(sigma)),
      schedule_(std::move(schedule)),
      budget_(budget)
{
}

FusionRef FusionRule::fibonacci()
{
    static const FusionRef f = std::make_shared<FusionRule>(RuleKind::Fibonacci, Alphabet::fibonacci(),
                                                            fibonacciMorphism(), ScrambleSchedule(),
                                                            kExpansionBudget);
    return f;
}

FusionRef FusionRule::scrambled(ScrambleSchedule schedule)
{
    schedule.validate();
    return std::make_shared<FusionRule>(RuleKind::Scrambled, Alphabet::scrambled(), Morphism(), std::move(schedule),
                                        kExpansionBudget);
}

FusionRef FusionRule::substitution(Alphabet alphabet, Morphism sigma)
{
    if (alphabet.size() != sigma.domainSize())
        throw ConstraintError("morphism domain does not match the alphabet");
    return std::make_shared<FusionRule>(RuleKind::Substitution, std::move(alphabet), std::move(sigma),
                                        ScrambleSchedule(), kExpansionBudget);
}

int FusionRule::maxLevel() const
{
    return kind_ == RuleKind::Scrambled ? schedule_.maxLevel() : 100000;
}

void FusionRule::checkLevel(int level) const
{
    if (level < 0 || level > maxLevel())
        throw DomainError("level " + std::to_string(level) + " outside 0.." + std::to_string(maxLevel()));
}

Morphism FusionRule::morphismAt(int level) const
{
    checkLevel(level);
    if (level == 0)
        return Morphism::identity(alphabet_.size());
    if (kind_ != RuleKind::Scrambled)
        return sigma_;
    {
        std::lock_guard lock(mutex_);
        auto it = morphisms_.find(level);
        if (it != morphisms_.end())
            return *it->second;
    }
    auto m = std::make_shared<const Morphism>(scrambledMorphism(schedule_, level, budget_));
    std::lock_guard lock(mutex_);
    morphisms_.emplace(level, m);
    return *m;
}

algebra::IntMatrix FusionRule::countsAt(int level) const
{
    checkLevel(level);
    if (level == 0)
        return algebra::IntMatrix::identity(alphabet_.size());
    if (kind_ != RuleKind::Scrambled)
        return substitutionMatrix(sigma_);
    long d = schedule_.delta(level);
    BigInt f1 = fibonacciNumber(d + 1), f0 = fibonacciNumber(d), fm = fibonacciNumber(d - 1);
    algebra::IntMatrix m(3);
    bool even = level % 2 == 0;
    m.at(kA, kA) = f1;
    m.at(kA, kB) = even ? BigInt(f0 - 1) : f0;
    m.at(kA, kThird) = even ? 1 : 0;
    m.at(kB, kA) = f0;
    m.at(kB, kB) = even ? BigInt(fm - 1) : fm;
    m.at(kB, kThird) = even ? 1 : 0;
    m.at(kThird, kA) = f0;
    m.at(kThird, kB) = fm;
    return m;
}

Population FusionRule::superletterPopulation(int level, Letter x) const
{
    checkLevel(level);
    if (x >= alphabet_.size())
        throw DomainError("letter outside the alphabet");
    const std::size_t k = alphabet_.size();
    std::lock_guard lock(mutex_);
    if (populations_.empty()) {
        populations_.emplace_back(k, Population(k));
        for (std::size_t y = 0; y < k; ++y)
            populations_[0][y][y] = 1;
    }
    while (static_cast<int>(populations_.size()) <= level) {
        int n = static_cast<int>(populations_.size());
        auto counts = countsAt(n);
        const auto& prev = populations_.back();
        std::vector<Population> next(k, Population(k));
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                if (counts.at(y, z) == 0)
                    continue;
                for (std::size_t c = 0; c < k; ++c)
                    next[y][c] += counts.at(y, z) * prev[z][c];
            }
        populations_.push_back(std::move(next));
    }
    return populations_[static_cast<std::size_t>(level)][x];
}

BigInt FusionRule::superletterLength(int level, Letter x) const
{
    BigInt total = 0;
    for (const auto& c : superletterPopulation(level, x))
        total += c;
    return total;
}

std::shared_ptr<const Word> FusionRule::superletter(int level, Letter x) const
{
    BigInt len = superletterLength(level, x);
    if (len > budget_)
        throw BudgetError("expansion too large: S_" + std::to_string(level) + "(" + alphabet_.symbol(x) +
                              ") has " + len.get_str() + " letters, budget " + std::to_string(budget_),
                          len);
    {
        std::lock_guard lock(mutex_);
        auto it = words_.find({level, x});
        if (it != words_.end())
            return it->second;
    }
    Word w;
    if (level == 0) {
        w.push_back(x);
    } else {
        w.reserve(len.get_ui());
        const Morphism m = morphismAt(level);
        for (Letter y : m.image(x)) {
            auto child = superletter(level - 1, y);
            w.insert(w.end(), child->begin(), child->end());
        }
    }
    auto ptr = std::make_shared<const Word>(std::move(w));
    std::lock_guard lock(mutex_);
    return words_.emplace(std::make_pair(level, x), ptr).first->second;
}

} // namespace aperiodic::symbolic
