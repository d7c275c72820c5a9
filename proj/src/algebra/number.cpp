#include "aperiodic/algebra/number.hpp"

#include <cctype>

#include "aperiodic/error.hpp"

namespace aperiodic::algebra {

namespace {

bool isIntegerLiteral(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

BigInt parseInteger(std::string_view s)
{
    if (!isIntegerLiteral(s))
        throw DomainError("not an integer literal: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

} // namespace

Rational parseRational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt p = parseInteger(text.substr(0, slash));
        BigInt q = parseInteger(text.substr(slash + 1));
        if (q == 0)
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos)
        return Rational(parseInteger(text));

    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+")
        digits += "0";
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DomainError("bad decimal literal: '" + std::string(text) + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt intPart = parseInteger(digits);
    BigInt fracPart = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
    BigInt num = abs(intPart) * scale + fracPart;
    if (negative)
        num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
}

std::string formatRational(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt floorOf(const Rational& q)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceilOf(const Rational& q)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt nearestInteger(const Rational& q)
{
    return floorOf(q + Rational(1, 2));
}

Rational absOf(const Rational& q)
{
    return q < 0 ? Rational(-q) : q;
}

std::string toDecimal(const Rational& q, int digits)
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = absOf(q) * scale;
    BigInt n = nearestInteger(scaled);
    std::string s = n.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (q < 0 && n != 0)
        s.insert(0, "-");
    return s;
}

unsigned long dyadicExponentBelow(const Rational& bound)
{
    unsigned long k = 0;
    Rational step(1);
    while (step > bound) {
        step /= 2;
        ++k;
    }
    return k;
}

Rational fromDouble(double x)
{
    Rational r(x);
    r.canonicalize();
    return r;
}

BigInt fibonacci(long n)
{
    BigInt r;
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_fib_ui(r.get_mpz_t(), m);
    if (n < 0 && m % 2 == 0)
        r = -r;
    return r;
}

} // namespace aperiodic::algebra
