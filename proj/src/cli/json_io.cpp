#include "aperiodic/cli/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "aperiodic/error.hpp"

namespace aperiodic::cli {

using algebra::BigInt;
using algebra::FieldElement;
using algebra::Rational;

Rational accuracyOf(int digits)
{
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return Rational(BigInt(1), den);
}

std::string decimal(const Rational& x, int digits)
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = Rational(x * Rational(scale));
    bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    // Round half up on the magnitude.
    Rational shifted = Rational(scaled + Rational(1, 2));
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && q != 0)
        s.insert(0, "-");
    return s;
}

std::string decimal(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Json realJson(const algebra::CertifiedReal& x, int digits)
{
    return Json{{"value", decimal(x.mid(), digits)}, {"accuracy", "1e-" + std::to_string(digits)}};
}

Json elementJson(const FieldElement& x, int digits)
{
    auto enc = algebra::embed(x, accuracyOf(digits + 2));
    return Json{{"exact", x.toString()},
                {"value", decimal(enc.mid(), digits)},
                {"accuracy", "1e-" + std::to_string(digits)}};
}

Rational parseRational(const std::string& raw)
{
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            text += ch;
    if (text.empty())
        throw DomainError("empty number");
    auto bad = [&]() { return DomainError("cannot read '" + raw + "' as a rational number"); };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
            throw bad();
        if (den == 0)
            throw DomainError("zero denominator in '" + raw + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-')
        negative = text[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool seenDigit = false, seenPoint = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            seenDigit = true;
            if (seenPoint)
                --exponent;
        } else if (ch == '.' && !seenPoint) {
            seenPoint = true;
        } else {
            throw bad();
        }
    }
    if (!seenDigit)
        throw bad();
    if (i < text.size()) {
        std::string e = text.substr(i + 1);
        if (e.empty())
            throw bad();
        std::size_t used = 0;
        long ev = 0;
        try {
            ev = std::stol(e, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != e.size() || ev > 10000 || ev < -10000)
            throw bad();
        exponent += ev;
    }
    BigInt mant(digits, 10);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(mant, p) : Rational(BigInt(mant * p));
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

namespace {

FieldElement parseSum(const std::string& text, const std::string& raw)
{
    if (text.empty())
        throw DomainError("cannot read '" + raw + "' as a number");
    FieldElement total(0L);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= text.size(); ++i) {
        bool boundary = i == text.size() ||
                        ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E' &&
                         text[i - 1] != '*');
        if (!boundary)
            continue;
        std::string term = text.substr(start, i - start);
        start = i;
        if (term.size() >= 3 && term.compare(term.size() - 3, 3, "phi") == 0) {
            std::string coef = term.substr(0, term.size() - 3);
            if (!coef.empty() && coef.back() == '*')
                coef.pop_back();
            Rational q = coef.empty() || coef == "+" ? Rational(1) : coef == "-" ? Rational(-1) : parseRational(coef);
            total += FieldElement(algebra::FieldDescriptor::golden(), std::vector<Rational>{Rational(0), q});
        } else {
            total += FieldElement(parseRational(term));
        }
    }
    return total;
}

} // namespace

FieldElement parseElement(const std::string& raw)
{
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            text += ch;
    const std::string suffix = "/sqrt5";
    if (text.size() > suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string body = text.substr(0, text.size() - suffix.size());
        if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
            body = body.substr(1, body.size() - 2);
        return parseSum(body, raw) / FieldElement::sqrt5();
    }
    if (text == "sqrt5")
        return FieldElement::sqrt5();
    return parseSum(text, raw);
}

std::string canonicalDump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string csvTable(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + cells[i];
        out += "\n";
    };
    line(header);
    for (const auto& r : rows)
        line(r);
    return out;
}

} // namespace aperiodic::cli
