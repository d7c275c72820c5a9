#include "aperiodic/algebra/polynomial.hpp"

#include <algorithm>
#include <set>

#include "aperiodic/error.hpp"

namespace aperiodic::algebra {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::fromIntegers(const std::vector<BigInt>& coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs)
        c.emplace_back(z);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(int degree, Rational c)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.isZero() || b.isZero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r)
{
    if (b.isZero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int da = a.degree();
    std::vector<Rational> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
    for (int k = da; k >= db; --k) {
        Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
        if (f == 0)
            continue;
        quot[static_cast<std::size_t>(k - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    q = Polynomial(std::move(quot));
    r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b)
{
    while (!b.isZero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.isZero() ? a : a.monic();
}

Polynomial Polynomial::monic() const
{
    if (isZero())
        return {};
    std::vector<Rational> r = c_;
    Rational lead = c_.back();
    for (auto& x : r)
        x /= lead;
    return Polynomial(std::move(r));
}

std::vector<BigInt> Polynomial::primitiveIntegers() const
{
    BigInt lcmDen = 1;
    for (const auto& x : c_)
        lcmDen = lcm(lcmDen, BigInt(x.get_den()));
    std::vector<BigInt> z;
    z.reserve(c_.size());
    BigInt g = 0;
    for (const auto& x : c_) {
        BigInt v = x.get_num() * (lcmDen / x.get_den());
        g = ::gcd(g, v);
        z.push_back(v);
    }
    if (g == 0)
        return z;
    if (z.back() < 0)
        g = -g;
    for (auto& v : z)
        v /= g;
    return z;
}

std::string Polynomial::toString() const
{
    if (isZero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mag = a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
        if (i == 0)
            out += mag;
        else {
            if (a != 1)
                out += mag;
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<Polynomial> sturmChain(const Polynomial& p)
{
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().isZero()) {
        Polynomial q, r;
        Polynomial::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.isZero())
            break;
        chain.push_back(Polynomial() - r);
    }
    if (chain.back().isZero())
        chain.pop_back();
    return chain;
}

namespace {

int signVariations(const std::vector<Polynomial>& chain, const Rational& x)
{
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p(x));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

std::vector<BigInt> positiveDivisors(BigInt n)
{
    n = abs(n);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

int countRootsIn(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi)
{
    return signVariations(chain, lo) - signVariations(chain, hi);
}

std::vector<Rational> rationalRoots(const Polynomial& p)
{
    std::vector<Rational> roots;
    if (p.degree() < 1)
        return roots;
    auto z = p.primitiveIntegers();
    std::size_t shift = 0;
    while (shift < z.size() && z[shift] == 0)
        ++shift;
    if (shift > 0)
        roots.emplace_back(0);
    std::vector<BigInt> reduced(z.begin() + static_cast<long>(shift), z.end());
    if (reduced.size() < 2)
        return roots;
    Polynomial q = Polynomial::fromIntegers(reduced);
    std::set<Rational> found;
    for (const auto& num : positiveDivisors(reduced.front()))
        for (const auto& den : positiveDivisors(reduced.back()))
            for (int s : {1, -1}) {
                Rational cand(num * s, den);
                cand.canonicalize();
                if (q(cand) == 0)
                    found.insert(cand);
            }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

Rational rootBound(const Polynomial& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, absOf(p.coeff(i) / p.leading()));
    return m + 1;
}

} // namespace aperiodic::algebra
