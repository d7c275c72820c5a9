#include "aperiodic/algebra/matrix.hpp"

#include <algorithm>
#include <functional>

#include "aperiodic/error.hpp"

namespace aperiodic::algebra {

std::vector<Rational> solveLinear(RationalMatrix m, std::vector<Rational> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw DegeneracyError("singular linear system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] /= m[i][i];
    return rhs;
}

int rankOf(RationalMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw ConstraintError("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
{
    IntMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
        for (std::size_t k = 0; k < x.n_; ++k) {
            if (x.at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < x.n_; ++j)
                r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const
{
    std::vector<BigInt> r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

// Faddeev-LeVerrier.
Polynomial characteristicPolynomial(const IntMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);

    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix mk(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    next[i][j] += a[i][l] * mk[l][j];
            next[i][i] += c[n - k + 1];
        }
        mk = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                tr += a[i][l] * mk[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

namespace {

void isolate(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi,
             std::vector<std::pair<Rational, Rational>>& out)
{
    int count = countRootsIn(chain, lo, hi);
    if (count == 0)
        return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    isolate(chain, lo, mid, out);
    isolate(chain, mid, hi, out);
}

double approximate(const Polynomial& p, Rational lo, Rational hi)
{
    int signLo = sgn(p(lo));
    Rational target(1, BigInt(1) << 60);
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(p(mid));
        if (s == 0)
            return mid.get_d();
        if (s == signLo)
            lo = mid;
        else
            hi = mid;
    }
    return Rational((lo + hi) / 2).get_d();
}

int multiplicityOf(Polynomial p, const Polynomial& factor)
{
    int k = 0;
    for (;;) {
        Polynomial q, r;
        Polynomial::divmod(p, factor, q, r);
        if (!r.isZero())
            return k;
        ++k;
        p = q;
    }
}

} // namespace

std::vector<Eigenvalue> isolateEigenvalues(const IntMatrix& m)
{
    Polynomial p = characteristicPolynomial(m);
    std::vector<Eigenvalue> out;

    Polynomial rest = p;
    for (const auto& r : rationalRoots(p)) {
        Polynomial linear(std::vector<Rational>{-r, Rational(1)});
        Eigenvalue ev;
        ev.multiplicity = multiplicityOf(rest, linear);
        for (int i = 0; i < ev.multiplicity; ++i) {
            Polynomial q, rem;
            Polynomial::divmod(rest, linear, q, rem);
            rest = q;
        }
        std::vector<BigInt> mp{-BigInt(r.get_num()), BigInt(r.get_den())};
        ev.minimalPolynomial = Polynomial::fromIntegers(mp);
        ev.lo = ev.hi = r;
        ev.field = FieldDescriptor::create(mp, r, r);
        ev.approx = r.get_d();
        out.push_back(std::move(ev));
    }

    if (rest.degree() >= 1) {
        Polynomial g = Polynomial::gcd(rest, rest.derivative());
        Polynomial squarefree, rem;
        Polynomial::divmod(rest, g, squarefree, rem);
        auto integral = squarefree.primitiveIntegers();
        Polynomial sf = Polynomial::fromIntegers(integral);
        int mult = multiplicityOf(rest, sf);
        auto chain = sturmChain(sf);
        Rational bound = rootBound(sf);
        std::vector<std::pair<Rational, Rational>> intervals;
        isolate(chain, -bound, bound, intervals);
        for (auto& [lo, hi] : intervals) {
            Eigenvalue ev;
            ev.minimalPolynomial = sf;
            ev.lo = lo;
            ev.hi = hi;
            ev.multiplicity = mult;
            ev.approx = approximate(sf, lo, hi);
            // Without rational roots, a factor of degree <= 3 is irreducible.
            if (sf.degree() <= 3)
                ev.field = FieldDescriptor::create(integral, lo, hi);
            else
                ev.numericOnly = true;
            out.push_back(std::move(ev));
        }
    }
    std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.approx > b.approx; });
    return out;
}

std::vector<FieldElement> eigenResidual(const IntMatrix& m, const FieldElement& lambda,
                                        const std::vector<FieldElement>& v)
{
    std::vector<FieldElement> r;
    for (std::size_t i = 0; i < m.size(); ++i) {
        FieldElement acc = -(lambda * v[i]);
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m.at(i, j) != 0)
                acc += v[j] * FieldElement(Rational(m.at(i, j)));
        r.push_back(acc);
    }
    return r;
}

Eigenvector eigenvectorExact(const IntMatrix& m, int which, std::size_t normalizeAt)
{
    auto evs = isolateEigenvalues(m);
    if (which < 1 || which > static_cast<int>(evs.size()))
        throw DomainError("eigenvalue index " + std::to_string(which) + " out of range (1.." +
                          std::to_string(evs.size()) + ")");
    const Eigenvalue& ev = evs[static_cast<std::size_t>(which - 1)];
    if (!ev.field)
        throw DomainError("eigenvalue has degree above 3; no exact field available");
    FieldElement lambda = FieldElement::generator(ev.field);
    const std::size_t n = m.size();

    std::vector<std::vector<FieldElement>> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement e(ev.field, Rational(m.at(i, j)));
            if (i == j)
                e -= lambda;
            a[i].push_back(e);
        }

    // Reduced row echelon form.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col].isZero())
            ++piv;
        if (piv == n)
            continue;
        std::swap(a[piv], a[row]);
        FieldElement inv = a[row][col].inverse();
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].isZero())
                continue;
            FieldElement f = a[r][col];
            for (std::size_t c = 0; c < n; ++c)
                a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0, p = 0; c < n; ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            free.push_back(c);
    }
    const int nullity = static_cast<int>(free.size());
    if (nullity == 0)
        throw DegeneracyError("eigenspace computed as trivial");
    if (nullity < ev.multiplicity)
        throw DegeneracyError("eigenvalue is not simple and its eigenspace is deficient");

    Eigenvector out;
    out.degenerate = nullity > 1;
    std::size_t chosen = free.front();
    if (std::find(free.begin(), free.end(), normalizeAt) != free.end())
        chosen = normalizeAt;
    std::vector<FieldElement> v(n, FieldElement(ev.field, Rational(0)));
    v[chosen] = FieldElement(ev.field, Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = -a[i][chosen];

    std::size_t norm = normalizeAt < n && !v[normalizeAt].isZero() ? normalizeAt : n;
    if (norm == n)
        for (std::size_t i = 0; i < n; ++i)
            if (!v[i].isZero()) {
                norm = i;
                break;
            }
    FieldElement scale = v[norm].inverse();
    for (auto& x : v)
        x *= scale;
    out.components = std::move(v);
    return out;
}

bool rationalIndependence(const std::vector<FieldElement>& values)
{
    if (values.empty())
        return true;
    FieldRef f = values.front().field();
    for (const auto& v : values)
        f = commonField(values.front().in(f), v);
    RationalMatrix rows;
    for (const auto& v : values)
        rows.push_back(v.in(f).coeffs());
    return rankOf(std::move(rows)) == static_cast<int>(values.size());
}

} // namespace aperiodic::algebra
