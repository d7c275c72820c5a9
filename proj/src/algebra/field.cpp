#include "aperiodic/algebra/field.hpp"

#include "aperiodic/algebra/matrix.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic::algebra {

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor::FieldDescriptor(std::vector<BigInt> minpoly, Rational lo, Rational hi)
    : degree_(static_cast<int>(minpoly.size()) - 1),
      minpoly_(std::move(minpoly)),
      poly_(Polynomial::fromIntegers(minpoly_)),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      cacheLo_(lo_),
      cacheHi_(hi_)
{
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::create(std::vector<BigInt> minpoly,
                                                               Rational rootLo, Rational rootHi)
{
    while (!minpoly.empty() && minpoly.back() == 0)
        minpoly.pop_back();
    int degree = static_cast<int>(minpoly.size()) - 1;
    if (degree < 1 || degree > 3)
        throw ConstraintError("field degree must be 1, 2 or 3 (got " + std::to_string(degree) + ")");
    if (rootLo > rootHi)
        throw ConstraintError("root interval is empty");
    Polynomial p = Polynomial::fromIntegers(minpoly);
    if (degree == 1) {
        Rational root = -p.coeff(0) / p.coeff(1);
        if (root < rootLo || root > rootHi)
            throw ConstraintError("root interval does not contain the root of " + p.toString());
        return std::make_shared<FieldDescriptor>(std::move(minpoly), root, root);
    }
    if (!rationalRoots(p).empty())
        throw ConstraintError("minimal polynomial " + p.toString() + " is reducible over Q");
    auto chain = sturmChain(p);
    // Roots are irrational, so they never sit on the rational endpoints.
    if (countRootsIn(chain, rootLo, rootHi) != 1)
        throw ConstraintError("interval does not isolate exactly one root of " + p.toString());
    return std::make_shared<FieldDescriptor>(std::move(minpoly), std::move(rootLo), std::move(rootHi));
}

const std::shared_ptr<const FieldDescriptor>& FieldDescriptor::rationals()
{
    static const auto q = create({BigInt(0), BigInt(1)}, 0, 0);
    return q;
}

const std::shared_ptr<const FieldDescriptor>& FieldDescriptor::golden()
{
    static const auto g = create({BigInt(-1), BigInt(-1), BigInt(1)}, 1, 2);
    return g;
}

std::pair<Rational, Rational> FieldDescriptor::rootEnclosure(const Rational& width) const
{
    std::lock_guard lock(cacheMutex_);
    if (cacheHi_ - cacheLo_ <= width)
        return {cacheLo_, cacheHi_};
    int signLo = sgn(poly_(cacheLo_));
    while (cacheHi_ - cacheLo_ > width) {
        Rational mid = (cacheLo_ + cacheHi_) / 2;
        int s = sgn(poly_(mid));
        if (s == signLo)
            cacheLo_ = mid;
        else
            cacheHi_ = mid;
    }
    return {cacheLo_, cacheHi_};
}

bool FieldDescriptor::sameField(const FieldDescriptor& other) const
{
    if (this == &other)
        return true;
    if (minpoly_ != other.minpoly_)
        return false;
    if (degree_ == 1)
        return lo_ == other.lo_;
    Rational lo = std::max(lo_, other.lo_);
    Rational hi = std::min(hi_, other.hi_);
    if (lo > hi)
        return false;
    return countRootsIn(sturmChain(poly_), lo, hi) == 1;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::vector<Rational> reduce(std::vector<Rational> p, const Polynomial& m)
{
    int d = m.degree();
    for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
        Rational f = p[static_cast<std::size_t>(k)] / m.leading();
        if (f == 0)
            continue;
        for (int i = 0; i <= d; ++i)
            p[static_cast<std::size_t>(k - d + i)] -= f * m.coeff(i);
    }
    p.resize(static_cast<std::size_t>(d));
    return p;
}

// Column j holds x * theta^j.
RationalMatrix multiplicationMatrix(const FieldElement& x)
{
    const int d = x.degree();
    RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    std::vector<Rational> basis(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> shifted(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i)
            shifted[static_cast<std::size_t>(i + j)] = x.coeffs()[static_cast<std::size_t>(i)];
        auto col = reduce(std::move(shifted), x.field()->minimalPolynomial());
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    }
    return m;
}

} // namespace

FieldElement::FieldElement() : FieldElement(FieldDescriptor::rationals(), Rational(0)) {}

FieldElement::FieldElement(FieldRef field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs))
{
    for (auto& q : c_)
        q.canonicalize();
    if (static_cast<int>(c_.size()) > field_->degree())
        c_ = reduce(std::move(c_), field_->minimalPolynomial());
    c_.resize(static_cast<std::size_t>(field_->degree()));
}

FieldElement::FieldElement(FieldRef field, const Rational& q) : field_(std::move(field))
{
    c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    c_[0] = q;
    c_[0].canonicalize();
}

FieldElement::FieldElement(const Rational& q) : FieldElement(FieldDescriptor::rationals(), q) {}

FieldElement::FieldElement(long q) : FieldElement(Rational(q)) {}

FieldElement FieldElement::generator(const FieldRef& field)
{
    if (field->degree() == 1)
        return FieldElement(field, field->rootLo());
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
    c[1] = 1;
    return FieldElement(field, std::move(c));
}

FieldElement FieldElement::goldenPower(long n)
{
    return FieldElement(FieldDescriptor::golden(),
                        std::vector<Rational>{Rational(fibonacci(n - 1)), Rational(fibonacci(n))});
}

FieldElement FieldElement::sqrt5()
{
    return FieldElement(FieldDescriptor::golden(), std::vector<Rational>{Rational(-1), Rational(2)});
}

bool FieldElement::isZero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool FieldElement::isRational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rational FieldElement::rationalValue() const
{
    if (!isRational())
        throw DomainError("element is not rational: " + toString());
    return c_[0];
}

FieldRef commonField(const FieldElement& a, const FieldElement& b)
{
    if (a.field() == b.field() || a.field()->sameField(*b.field()))
        return a.field();
    if (b.isRational())
        return a.field();
    if (a.isRational())
        return b.field();
    throw DomainError("elements live in different fields: " + a.field()->minimalPolynomial().toString() +
                      " vs " + b.field()->minimalPolynomial().toString());
}

FieldElement FieldElement::in(const FieldRef& target) const
{
    if (field_ == target || field_->sameField(*target))
        return FieldElement(target, c_);
    if (isRational())
        return FieldElement(target, c_[0]);
    throw DomainError("cannot move a non-rational element into another field");
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    FieldRef f = commonField(*this, o);
    if (f != field_)
        *this = in(f);
    FieldElement other = o.field() == f ? o : o.in(f);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += other.c_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    FieldRef f = commonField(*this, o);
    if (f != field_)
        *this = in(f);
    FieldElement other = o.field() == f ? o : o.in(f);
    if (other.isRational()) {
        for (auto& x : c_)
            x *= other.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < c_.size(); ++j)
            prod[i + j] += c_[i] * other.c_[j];
    }
    c_ = reduce(std::move(prod), field_->minimalPolynomial());
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    FieldRef f;
    try {
        f = commonField(a, b);
    } catch (const DomainError&) {
        return false;
    }
    return a.in(f).coeffs() == b.in(f).coeffs();
}

FieldElement FieldElement::inverse() const
{
    if (isZero())
        throw DomainError("division by zero in field");
    if (isRational())
        return FieldElement(field_, Rational(1) / c_[0]);
    auto m = multiplicationMatrix(*this);
    std::vector<Rational> rhs(c_.size());
    rhs[0] = 1;
    return FieldElement(field_, solveLinear(std::move(m), std::move(rhs)));
}

FieldElement FieldElement::pow(long n) const
{
    if (n < 0)
        return inverse().pow(-n);
    FieldElement result(field_, Rational(1));
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

FieldElement FieldElement::conjugate() const
{
    if (degree() == 1)
        return *this;
    if (degree() != 2)
        throw DomainError("conjugate() is defined for quadratic fields only");
    const Polynomial& m = field_->minimalPolynomial();
    Rational rootSum = -m.coeff(1) / m.coeff(2);
    return FieldElement(field_, std::vector<Rational>{c_[0] + c_[1] * rootSum, -c_[1]});
}

Rational FieldElement::trace() const
{
    auto m = multiplicationMatrix(*this);
    Rational t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

int FieldElement::sign() const
{
    if (isZero())
        return 0;
    if (isRational())
        return sgn(c_[0]);
    Rational acc(1, 1024);
    for (;;) {
        CertifiedReal e = embed(acc);
        if (e.lo() > 0)
            return 1;
        if (e.hi() < 0)
            return -1;
        acc /= BigInt(1) << 64;
    }
}

double FieldElement::toDouble() const
{
    if (isRational())
        return c_[0].get_d();
    return embed(Rational(1, BigInt(1) << 60)).toDouble();
}

CertifiedReal FieldElement::embed(const Rational& accuracy) const
{
    return algebra::embed(*this, accuracy);
}

std::string FieldElement::key() const
{
    std::string k;
    for (const auto& x : c_) {
        k += formatRational(x);
        k += ';';
    }
    return k;
}

std::string FieldElement::toString() const
{
    if (degree() == 1)
        return c_[0].get_str();
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        std::string term = c_[i].get_str();
        if (i == 1)
            term += "*t";
        else if (i > 1)
            term += "*t^" + std::to_string(i);
        if (!s.empty() && term[0] != '-')
            s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

bool operator<(const FieldElement& a, const FieldElement& b)
{
    return (a - b).sign() < 0;
}

} // namespace aperiodic::algebra
