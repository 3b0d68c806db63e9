#pragma once
// Independent reference implementations and random instance generators for
// the test suites.  The oracles deliberately avoid the library's algorithms:
// signatures come from the characteristic polynomial, Zariski decompositions
// from trying every support, short vectors from scanning a coordinate box.

#include "conelat/arith.hpp"
#include "conelat/exactlat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace conelat;

// ---------------------------------------------------------------------------
// randomness

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    bool coin() { return uniform(0, 1) == 1; }
    template <typename T>
    void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), gen); }
};

inline ZMatrix zmatrix(const std::vector<std::vector<long>>& rows)
{
    ZMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

inline QMatrix qmatrix(const std::vector<std::vector<long>>& rows)
{
    return to_rational(zmatrix(rows));
}

inline QVec qvec(const std::vector<long>& v)
{
    QVec out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

inline ZVec zvec(const std::vector<long>& v)
{
    ZVec out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// Product of a few elementary operations with small multipliers.
inline ZMatrix random_unimodular(std::size_t n, Rng& rng, int ops = 4)
{
    ZMatrix u = ZMatrix::identity(n);
    if (n < 2)
        return rng.coin() ? u : ZMatrix{{-1}};
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
        if (j >= i)
            ++j;
        long c = rng.uniform(-1, 1);
        if (c == 0)
            c = 1;
        for (std::size_t r = 0; r < n; ++r)
            u(r, i) += c * u(r, j);
    }
    return u;
}

// The Gram matrix in the basis given by the columns of u: u^T G u.
inline QMatrix conjugate(const QMatrix& g, const ZMatrix& u)
{
    QMatrix q = to_rational(u);
    return q.transpose() * g * q;
}

// Integral Gram of signature (1, n-1) with small entries.
inline QMatrix random_hyperbolic_gram(std::size_t n, Rng& rng)
{
    QMatrix g(n, n);
    g(0, 0) = rng.uniform(1, 4) * 2;
    for (std::size_t i = 1; i < n; ++i)
        g(i, i) = -rng.uniform(1, 3);
    if (n >= 3 && rng.coin()) {
        // hyperbolic plane block in the first two coordinates
        g(0, 0) = 0;
        g(1, 1) = 0;
        g(0, 1) = g(1, 0) = 1;
    }
    return conjugate(g, random_unimodular(n, rng));
}

// Random nonzero integer vector with entries in [-r, r].
inline QVec random_vector(std::size_t n, long r, Rng& rng)
{
    for (;;) {
        QVec v(n);
        for (auto& x : v)
            x = rng.uniform(-r, r);
        if (!is_zero(v))
            return v;
    }
}

// ---------------------------------------------------------------------------
// signature via the characteristic polynomial and Descartes' rule

// Coefficients c_0..c_n of det(x I - A) = sum c_k x^k (Faddeev-LeVerrier).
inline std::vector<Rational> characteristic_polynomial(const QMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix m(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix mk = a * m;
        for (std::size_t i = 0; i < n; ++i)
            mk(i, i) += c[n - k + 1];
        m = mk;
        QMatrix am = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

inline std::size_t sign_changes(const std::vector<Rational>& c)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// All eigenvalues of a symmetric matrix are real, so Descartes' rule counts
// positive and negative ones exactly.
inline Signature descartes_signature(const QMatrix& gram)
{
    auto c = characteristic_polynomial(gram);
    std::vector<Rational> neg = c;
    for (std::size_t k = 1; k < neg.size(); k += 2)
        neg[k] = -neg[k];
    return {sign_changes(c), sign_changes(neg)};
}

// ---------------------------------------------------------------------------
// Zariski decomposition by trying every support

struct ZariskiOracle {
    QVec positive;
    QVec coefficients;
    std::vector<std::size_t> support;
};

inline Rational q_pair(const QMatrix& g, const QVec& u, const QVec& v)
{
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * g(i, j) * v[j];
    return s;
}

// Sylvester: every leading minor of -G is positive.
inline bool sylvester_negative_definite(const QMatrix& g)
{
    const std::size_t n = g.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix b(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                b(i, j) = -g(i, j);
        if (determinant(b) <= 0)
            return false;
    }
    return true;
}

// Every support S whose Gram is negative definite, whose solved coefficients
// are all positive and after which no root pairs negatively with P.
inline std::vector<ZariskiOracle> zariski_all_supports(const QMatrix& gram, const QVec& D, const std::vector<QVec>& roots)
{
    const std::size_t k = roots.size();
    std::vector<ZariskiOracle> found;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<std::size_t> S;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                S.push_back(i);
        QVec coeff(k);
        if (!S.empty()) {
            QMatrix sg(S.size(), S.size());
            QVec rhs(S.size());
            for (std::size_t a = 0; a < S.size(); ++a) {
                rhs[a] = q_pair(gram, D, roots[S[a]]);
                for (std::size_t b = 0; b < S.size(); ++b)
                    sg(a, b) = q_pair(gram, roots[S[a]], roots[S[b]]);
            }
            if (!sylvester_negative_definite(sg))
                continue;
            QVec sol = solve(sg, rhs);
            bool positive = true;
            for (std::size_t a = 0; a < S.size(); ++a) {
                if (sol[a] <= 0)
                    positive = false;
                coeff[S[a]] = sol[a];
            }
            if (!positive)
                continue;
        }
        QVec P = D;
        for (std::size_t i = 0; i < k; ++i)
            P = sub(P, scale(coeff[i], roots[i]));
        bool feasible = true;
        for (std::size_t i = 0; i < k; ++i)
            if (q_pair(gram, P, roots[i]) < 0)
                feasible = false;
        if (feasible)
            found.push_back({P, coeff, S});
    }
    return found;
}

// <2> + (negative definite root Gram with off-diagonal entries in {0, 1}),
// scrambled; roots are the images of the second block's basis.
struct ZariskiInstance {
    QMatrix gram;
    std::vector<QVec> roots;
};

inline ZariskiInstance random_zariski_instance(Rng& rng)
{
    for (;;) {
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 6));
        QMatrix rg(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            rg(i, i) = -rng.uniform(1, 4);
            for (std::size_t j = i + 1; j < k; ++j)
                rg(i, j) = rg(j, i) = rng.uniform(0, 3) == 0 ? 1 : 0;
        }
        if (!sylvester_negative_definite(rg))
            continue;
        const std::size_t n = k + 1;
        QMatrix g(n, n);
        g(0, 0) = 2 * rng.uniform(1, 3);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                g(i + 1, j + 1) = rg(i, j);
        ZMatrix u = random_unimodular(n, rng, 5);
        QMatrix ui = inverse(to_rational(u));
        ZariskiInstance inst{conjugate(g, u), {}};
        for (std::size_t i = 0; i < k; ++i) {
            QVec r(n);
            r[i + 1] = 1;
            inst.roots.push_back(ui * r);
        }
        return inst;
    }
}

// ---------------------------------------------------------------------------
// short negative vectors by scanning a coordinate box

// Coordinate radius containing every v with -B <= v^2 < 0 and
// |pair(v, h)| <= M, from the positive definite majorant
// F(v) = 2 pair(v, h)^2 / h^2 - v^2 <= 2 M^2 / h^2 + B.
inline long box_radius(const QMatrix& gram, const QVec& h, double B, double M)
{
    const std::size_t n = gram.rows();
    QVec gh(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gh[i] += gram(i, j) * h[j];
    const Rational hh = q_pair(gram, h, h);
    QMatrix f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f(i, j) = 2 * gh[i] * gh[j] / hh - gram(i, j);
    QMatrix fi = inverse(f);
    const double C = 2 * M * M / hh.get_d() + B;
    double r = 0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max(r, std::sqrt(C * fi(i, i).get_d()));
    return static_cast<long>(std::ceil(r)) + 1;
}

struct BoxHit {
    ZVec coords;
    Integer square;
    Integer height;
    friend bool operator<(const BoxHit& a, const BoxHit& b) { return a.coords < b.coords; }
};

// Calls visit(v) for every integer vector with |v_i| <= r.
template <typename F>
void scan_box(std::size_t n, long r, F&& visit)
{
    std::vector<long> v(n, -r);
    for (;;) {
        visit(v);
        std::size_t i = 0;
        while (i < n && v[i] == r)
            v[i++] = -r;
        if (i == n)
            return;
        ++v[i];
    }
}

inline long gcd_all(const std::vector<long>& v)
{
    long g = 0;
    for (long x : v)
        g = std::gcd(g, std::labs(x));
    return g;
}

// Sign class representative: pair(v, h) > 0, or lexicographically positive
// when orthogonal to h.
inline bool canonical_sign(const std::vector<long>& v, const Rational& height)
{
    if (height != 0)
        return height > 0;
    for (long x : v)
        if (x != 0)
            return x > 0;
    return false;
}

inline std::set<BoxHit> box_negative(const QMatrix& gram, const ZVec& h, const Rational& B, const Rational& M, long r)
{
    const std::size_t n = gram.rows();
    const QVec hq = to_rational(h);
    std::set<BoxHit> out;
    scan_box(n, r, [&](const std::vector<long>& v) {
        if (gcd_all(v) != 1)
            return;
        QVec q = qvec(v);
        Rational sq = q_pair(gram, q, q);
        if (sq >= 0 || sq < -B)
            return;
        Rational ht = q_pair(gram, q, hq);
        if (abs(ht) > M || !canonical_sign(v, ht))
            return;
        out.insert({zvec(v), sq.get_num(), ht.get_num()});
    });
    return out;
}

// ---------------------------------------------------------------------------
// rank 2: all integral isometries with entries in [-b, b]

struct Rank2Iso {
    long a, b, c, d;
};

inline std::vector<Rank2Iso> rank2_isometries(const QMatrix& gram, long bound)
{
    std::vector<Rank2Iso> out;
    const Rational g00 = gram(0, 0), g01 = gram(0, 1), g11 = gram(1, 1);
    for (long a = -bound; a <= bound; ++a)
        for (long c = -bound; c <= bound; ++c) {
            // first column (a, c) must keep the square of e1
            Rational q1 = g00 * a * a + 2 * g01 * a * c + g11 * c * c;
            if (q1 != g00)
                continue;
            for (long b = -bound; b <= bound; ++b)
                for (long d = -bound; d <= bound; ++d) {
                    Rational q2 = g00 * b * b + 2 * g01 * b * d + g11 * d * d;
                    Rational p = g00 * a * b + g01 * (a * d + b * c) + g11 * c * d;
                    if (q2 == g11 && p == g01)
                        out.push_back({a, b, c, d});
                }
        }
    return out;
}

} // namespace oracle
