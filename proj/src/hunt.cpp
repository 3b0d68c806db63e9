#include "conelat/hunt.hpp"

#include <algorithm>
#include <functional>

namespace conelat::hunt {

namespace {

bool perfect_square(const Integer& z, Integer& root)
{
    if (z < 0)
        return false;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return root * root == z;
}

// Fincke-Pohst over a positive definite rational form: calls visit(x) for
// every integer x with x^T F x <= bound.
void short_vectors(const QMatrix& F, const Rational& bound, const std::function<void(const ZVec&)>& visit)
{
    const std::size_t n = F.rows();
    // F(x) = sum_i d[i] * (x_i + sum_{j>i} u(i,j) x_j)^2
    QMatrix u(n, n);
    QVec d(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = F(i, i);
        for (std::size_t k = 0; k < i; ++k)
            s -= d[k] * u(k, i) * u(k, i);
        if (s <= 0)
            throw Error("enumeration form is not positive definite");
        d[i] = s;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational t = F(i, j);
            for (std::size_t k = 0; k < i; ++k)
                t -= d[k] * u(k, i) * u(k, j);
            u(i, j) = t / d[i];
        }
    }
    ZVec x(n);
    // level i chooses x_i given x_{i+1..n-1}; used is the form value so far
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& used) {
        Rational center = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            center += u(i, j) * x[j];
        const Rational room = (bound - used) / d[i];
        Integer s;
        mpz_sqrt(s.get_mpz_t(), ceil_of(room).get_mpz_t());
        const Integer lo = floor_of(-center) - s - 1;
        const Integer hi = ceil_of(-center) + s + 1;
        for (Integer xi = lo; xi <= hi; ++xi) {
            Rational t = xi + center;
            Rational val = used + d[i] * t * t;
            if (val > bound)
                continue;
            x[i] = xi;
            if (i == 0)
                visit(x);
            else
                rec(i - 1, val);
        }
        x[i] = 0;
    };
    if (n > 0 && bound >= 0)
        rec(n - 1, Rational(0));
}

} // namespace

std::vector<Candidate> enum_negative(const Lattice& L, const Query& q)
{
    if (!L.integral())
        throw Error("enumeration needs an integral Gram matrix");
    const std::size_t n = L.rank();
    if (q.h.size() != n)
        throw Error("base point has the wrong length");
    const Signature sig = signature(L);
    if (sig.plus != 1)
        throw Error("enumeration needs a hyperbolic lattice of signature (1, n)");
    if (q.B <= 0)
        throw Error("square bound B must be positive");
    if (q.M < 0)
        throw Error("height bound M must be nonnegative");
    const QVec h = to_rational(q.h);
    const Rational hh = L.square(h);
    if (hh <= 0)
        throw Error("base point must have positive square");

    // 2 pair(v,h)^2 / h^2 - v^2 is positive definite and bounded on the targets
    const QVec gh = L.functional(h);
    QMatrix F(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            F(i, j) = 2 * gh[i] * gh[j] / hh - L.gram()(i, j);
    const Rational bound = 2 * q.M * q.M / hh + q.B;

    std::vector<Candidate> out;
    short_vectors(F, bound, [&](const ZVec& x) {
        const QVec v = to_rational(x);
        const Rational height = L.pair(v, h);
        if (height < 0 || height > q.M)
            return;
        if (height == 0 && !lex_positive(x))
            return;
        const Rational sq = L.square(v);
        if (sq >= 0 || sq < -q.B)
            return;
        if (!is_primitive(x))
            return;
        out.push_back({x, sq.get_num(), height.get_num()});
    });
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.height != b.height)
            return a.height < b.height;
        if (a.square != b.square)
            return a.square < b.square;
        return a.coords < b.coords;
    });
    return out;
}

Rational sqrt_upper(const Rational& t)
{
    if (t <= 0)
        return 0;
    Integer rn, rd;
    if (perfect_square(t.get_num(), rn) && perfect_square(t.get_den(), rd)) {
        Rational r(rn, rd);
        r.canonicalize();
        return r;
    }
    // Newton from above never undershoots; rounding up keeps it above.
    const Rational scale_bits = Rational(Integer(1) << 64);
    Rational x = t > 1 ? t : Rational(1);
    for (int it = 0; it < 200; ++it) {
        Rational next = (x + t / x) / 2;
        next = Rational(ceil_of(next * scale_bits)) / scale_bits;
        if (next >= x)
            break;
        x = next;
    }
    Integer k = ceil_of(x * 1000);
    while (k > 0) {
        Rational lower{Integer(k - 1), Integer(1000)};
        lower.canonicalize();
        if (lower * lower < t)
            break;
        --k;
    }
    Rational m{k, Integer(1000)};
    m.canonicalize();
    if (m * m < t)
        throw Error("internal: square root bound undershoots");
    return m;
}

Rational cone_bound_squared(const Lattice& L, const cones::Cone& cone, const QVec& h, const Rational& B)
{
    if (B <= 0)
        throw Error("square bound B must be positive");
    const Rational hh = L.square(h);
    if (hh <= 0)
        throw Error("base point must have positive square");
    std::vector<QVec> gens = cone.generators;
    if (gens.empty())
        gens = cones::completed(L, cone).generators;
    if (gens.empty())
        throw Error("cone bound needs a cone with generators");
    Rational best = 0;
    for (const auto& r : gens) {
        const Rational rr = L.square(r);
        if (rr <= 0)
            throw Error("cone generators must have positive square");
        const Rational hr = L.pair(h, r);
        const Rational term = hr * hr / rr - hh;
        if (term > best)
            best = term;
    }
    return B * best;
}

Rational cone_bound(const Lattice& L, const cones::Cone& cone, const QVec& h, const Rational& B,
                    const Rational& widen)
{
    if (widen < 1)
        throw Error("widening factor must be at least 1");
    return sqrt_upper(cone_bound_squared(L, cone, h, B)) * widen;
}

std::vector<Candidate> walls_meeting(const Lattice& L, const cones::Cone& cone, const Rational& B,
                                     const Rational& widen)
{
    const ZVec h = to_integer(cone.reference);
    const Rational M = cone_bound(L, cone, cone.reference, B, widen);
    std::vector<Candidate> out;
    for (auto& c : enum_negative(L, {h, B, M}))
        if (cones::wall_meets_cone(L, to_rational(c.coords), cone))
            out.push_back(std::move(c));
    return out;
}

} // namespace conelat::hunt
