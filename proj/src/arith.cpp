#include "conelat/arith.hpp"

#include <algorithm>
#include <utility>

namespace conelat {

QVec to_rational(const ZVec& v)
{
    return QVec(v.begin(), v.end());
}

QMatrix to_rational(const ZMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q(i, j) = m(i, j);
    return q;
}

bool is_integral(const QVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool is_integral(const QMatrix& m)
{
    return is_integral(m.data());
}

ZVec to_integer(const QVec& v)
{
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1)
            throw Error("expected an integral vector, got entry " + to_string(v[i]));
        z[i] = v[i].get_num();
    }
    return z;
}

ZMatrix to_integer(const QMatrix& m)
{
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw Error("expected an integral matrix, got entry " + to_string(m(i, j)));
            z(i, j) = m(i, j).get_num();
        }
    return z;
}

QVec add(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error("vector dimension mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

QVec sub(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error("vector dimension mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

QVec scale(const Rational& c, const QVec& v)
{
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

QVec negate(const QVec& v)
{
    return scale(Rational(-1), v);
}

bool is_zero(const QVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(const ZVec& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Integer denominator_lcm(const QVec& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

ZVec primitive_direction(const QVec& v)
{
    if (is_zero(v))
        throw Error("zero vector has no direction");
    Integer l = denominator_lcm(v);
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational t = v[i] * l;
        z[i] = t.get_num();
    }
    Integer g = content(z);
    for (auto& x : z)
        x /= g;
    return z;
}

bool lex_positive(const QVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return x > 0;
    return false;
}

bool lex_positive(const ZVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return x > 0;
    return false;
}

namespace {

// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Rational determinant(const QMatrix& m)
{
    if (!m.square())
        throw Error("determinant of a non-square matrix");
    QMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m)
{
    if (!m.square())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error("matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::size_t rank(const QMatrix& m)
{
    QMatrix a = m;
    return rref(a).size();
}

QVec solve(const QMatrix& a, const QVec& b)
{
    if (!a.square() || a.rows() != b.size())
        throw Error("linear system dimension mismatch");
    const std::size_t n = a.rows();
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error("linear system is singular");
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug(i, n);
    return x;
}

std::vector<QVec> kernel(const QMatrix& m)
{
    QMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        QVec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

Rational parse_rational(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (c != ' ')
            t.push_back(c);
    if (t.empty())
        throw Error("empty rational literal");
    auto valid_int = [](const std::string& x) {
        std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i == x.size())
            return false;
        return std::all_of(x.begin() + static_cast<std::ptrdiff_t>(i), x.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("malformed rational literal '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    Integer d(den);
    if (d == 0)
        throw Error("zero denominator in '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

} // namespace conelat
