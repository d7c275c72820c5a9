#pragma once

#include <limits>
#include <optional>

#include "aperiodic/algebra/number.hpp"
#include "aperiodic/symbolic/fusion.hpp"

namespace aperiodic::symbolic {

struct DesubstitutionResult {
    Word preimage;
    /// Letters of sigma(preimage) that precede w.
    std::size_t offset = 0;
    /// A final lone `a` was read as sigma(b); it could also be a cut-off sigma(a).
    bool trailingAmbiguous = false;
};

/// Inverts a -> ab, b -> a on a factor of the Fibonacci language.
/// Throws LanguageError on "bb" or "aaa".
DesubstitutionResult desubstituteFibonacci(const Word& w);

struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct DecompositionPart {
    Letter type = 0;
    std::size_t offset = 0;
    std::size_t length = 0;
    /// b and e superletters coincide at this level and context did not separate them.
    bool ambiguous = false;
};

struct Decomposition {
    int level = 0;
    std::vector<DecompositionPart> parts;
    std::optional<Span> leadingPartial;
    std::optional<Span> trailingPartial;
    /// Every part was re-expanded and compared with the input.
    bool verified = false;
};

inline constexpr int kAllLevels = std::numeric_limits<int>::max();

/// Levels at which each end of the word is known to sit on a superletter
/// boundary. The defaults treat the word as a concatenation of complete
/// superletters at every level; use -1 for an arbitrary window.
struct Alignment {
    int left = kAllLevels;
    int right = kAllLevels;
};

/// Splits w into level-n superletters. Unresolvable ends are reported as
/// partials. Throws LanguageError when w is not in the language.
Decomposition decompose(const FusionRule& f, const Word& w, int level, Alignment align = {});

struct UnscrambleResult {
    Word word;
    /// Germ parts replaced by the Fibonacci superletter of b.
    std::size_t germParts = 0;
    std::size_t trimmedLeading = 0;
    std::size_t trimmedTrailing = 0;
};

/// Replaces each level-n part of type x by F_{N(n)}(x), germ parts by F_{N(n)}(b).
/// Partial boundary parts are trimmed.
UnscrambleResult unscramble(const FusionRule& f, const Decomposition& d);

/// Germ parts per letter of w at odd level kappa.
algebra::Rational germFrequency(const FusionRule& f, const Word& w, int kappa, Alignment align = {});

} // namespace aperiodic::symbolic
