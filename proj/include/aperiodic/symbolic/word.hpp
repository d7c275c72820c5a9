#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aperiodic/algebra/number.hpp"

namespace aperiodic::symbolic {

using algebra::BigInt;

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr Letter kA = 0;
inline constexpr Letter kB = 1;
/// Third letter: the germ in the scrambled alphabet, `c` in the three-letter one.
inline constexpr Letter kThird = 2;

/// Ordered set of single-character symbols. Letter i renders as symbols()[i].
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols, std::optional<Letter> germ = std::nullopt);

    static const Alphabet& fibonacci();
    static const Alphabet& scrambled();
    static const Alphabet& abc();

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }
    char symbol(Letter x) const { return symbols_.at(x); }
    /// Throws DomainError for unknown symbols.
    Letter letter(char c) const;
    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }

    std::optional<Letter> germ() const { return germ_; }
    bool isGerm(Letter x) const { return germ_ && *germ_ == x; }

    Word parse(std::string_view text) const;
    std::string render(const Word& w) const;
    std::string render(const Word& w, std::size_t begin, std::size_t end) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b)
    {
        return a.symbols_ == b.symbols_ && a.germ_ == b.germ_;
    }

private:
    std::string symbols_;
    std::optional<Letter> germ_;
};

/// Letter counts indexed by letter.
using Population = std::vector<BigInt>;

Population population(const Word& w, std::size_t alphabetSize);
Population population(const Word& w, std::size_t begin, std::size_t end, std::size_t alphabetSize);

/// Exact Fibonacci number with f_0 = 0, f_1 = 1.
BigInt fibonacciNumber(long n);

} // namespace aperiodic::symbolic
