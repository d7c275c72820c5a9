#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "aperiodic/symbolic/morphism.hpp"
#include "aperiodic/symbolic/schedule.hpp"

namespace aperiodic::symbolic {

enum class RuleKind { Fibonacci, Scrambled, Substitution };

/// Scrambled level morphism on {a, b, e}. Odd levels use sigma^Delta on a, b;
/// even levels do the same but turn the final b of each image into e. At
/// every level e maps to a^{f_Delta} b^{f_{Delta-1}}.
Morphism scrambledMorphism(const ScrambleSchedule& s, int level, std::size_t budget = kExpansionBudget);

/// sigma^k(x) with its last b replaced by e.
Word withFinalGerm(Word w);
/// a^{f_k} b^{f_{k-1}}.
Word sortedFibonacciImage(long k);

/// Sequence of level morphisms with memoized level-n superletters
/// S_n = S_{n-1} o morphismAt(n), S_0 = identity.
///
/// The memo tables are the only mutable state; they are guarded by a mutex and
/// their contents do not depend on call order.
class FusionRule {
public:
    static std::shared_ptr<const FusionRule> fibonacci();
    static std::shared_ptr<const FusionRule> scrambled(ScrambleSchedule schedule);
    static std::shared_ptr<const FusionRule> substitution(Alphabet alphabet, Morphism sigma);

    RuleKind kind() const { return kind_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const ScrambleSchedule& schedule() const { return schedule_; }
    int maxLevel() const;
    std::size_t budget() const { return budget_; }

    /// Level-n morphism. Throws BudgetError when its images would be too long.
    Morphism morphismAt(int level) const;
    /// Population matrix of morphismAt(level), computed without expansion.
    algebra::IntMatrix countsAt(int level) const;

    /// Letter counts of S_n(x), exact and never expanded.
    Population superletterPopulation(int level, Letter x) const;
    BigInt superletterLength(int level, Letter x) const;

    /// Materialized S_n(x). Throws BudgetError carrying the exact length.
    std::shared_ptr<const Word> superletter(int level, Letter x) const;

    FusionRule(RuleKind kind, Alphabet alphabet, Morphism sigma, ScrambleSchedule schedule, std::size_t budget);

private:
    void checkLevel(int level) const;

    RuleKind kind_;
    Alphabet alphabet_;
    Morphism sigma_;
    ScrambleSchedule schedule_;
    std::size_t budget_;

    mutable std::mutex mutex_;
    mutable std::vector<std::vector<Population>> populations_;
    mutable std::map<std::pair<int, Letter>, std::shared_ptr<const Word>> words_;
    mutable std::map<int, std::shared_ptr<const Morphism>> morphisms_;
};

using FusionRef = std::shared_ptr<const FusionRule>;

} // namespace aperiodic::symbolic
