#include "aperiodic/symbolic/word.hpp"

#include <set>

#include "aperiodic/error.hpp"

namespace aperiodic::symbolic {

Alphabet::Alphabet(std::string symbols, std::optional<Letter> germ)
    : symbols_(std::move(symbols)), germ_(germ)
{
    if (symbols_.empty())
        throw ConstraintError("alphabet must not be empty");
    if (symbols_.size() > 255)
        throw ConstraintError("alphabet too large");
    std::set<char> seen(symbols_.begin(), symbols_.end());
    if (seen.size() != symbols_.size())
        throw ConstraintError("alphabet letters must be distinct: '" + symbols_ + "'");
    if (germ_ && *germ_ >= symbols_.size())
        throw ConstraintError("germ letter outside the alphabet");
}

const Alphabet& Alphabet::fibonacci()
{
    static const Alphabet a("ab");
    return a;
}

const Alphabet& Alphabet::scrambled()
{
    static const Alphabet a("abe", kThird);
    return a;
}

const Alphabet& Alphabet::abc()
{
    static const Alphabet a("abc");
    return a;
}

Letter Alphabet::letter(char c) const
{
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
        throw DomainError(std::string("letter '") + c + "' is not in the alphabet '" + symbols_ + "'");
    return static_cast<Letter>(pos);
}

Word Alphabet::parse(std::string_view text) const
{
    Word w;
    w.reserve(text.size());
    for (char c : text)
        w.push_back(letter(c));
    return w;
}

std::string Alphabet::render(const Word& w) const
{
    return render(w, 0, w.size());
}

std::string Alphabet::render(const Word& w, std::size_t begin, std::size_t end) const
{
    std::string s;
    s.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        s.push_back(symbol(w[i]));
    return s;
}

Population population(const Word& w, std::size_t alphabetSize)
{
    return population(w, 0, w.size(), alphabetSize);
}

Population population(const Word& w, std::size_t begin, std::size_t end, std::size_t alphabetSize)
{
    std::vector<unsigned long> counts(alphabetSize);
    for (std::size_t i = begin; i < end; ++i) {
        if (w[i] >= alphabetSize)
            throw DomainError("letter index outside the alphabet");
        ++counts[w[i]];
    }
    Population p;
    p.reserve(alphabetSize);
    for (auto c : counts)
        p.emplace_back(c);
    return p;
}

BigInt fibonacciNumber(long n)
{
    if (n < 0)
        throw DomainError("fibonacciNumber needs n >= 0");
    return algebra::fibonacci(n);
}

} // namespace aperiodic::symbolic
