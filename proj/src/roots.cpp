#include "conelat/roots.hpp"

#include <algorithm>
#include <string>

namespace conelat::roots {

QMatrix reflection(const Lattice& L, const QVec& e)
{
    const Rational ee = L.square(e);
    if (ee == 0)
        throw Error("cannot reflect in an isotropic vector");
    const QVec fe = L.functional(e);
    const std::size_t n = L.rank();
    QMatrix r = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) -= 2 * e[i] * fe[j] / ee;
    return r;
}

QVec reflect(const Lattice& L, const QVec& e, const QVec& x)
{
    const Rational ee = L.square(e);
    if (ee == 0)
        throw Error("cannot reflect in an isotropic vector");
    return sub(x, scale(2 * L.pair(e, x) / ee, e));
}

IntegralityReport reflection_integrality(const Lattice& L, const QVec& e)
{
    if (!L.integral())
        throw Error("integrality of a reflection needs an integral Gram matrix");
    const QMatrix r = reflection(L, e);
    IntegralityReport rep;
    for (std::size_t j = 0; j < L.rank(); ++j) {
        QVec image = r.column(j);
        Integer d = denominator_lcm(image);
        mpz_lcm(rep.denominator.get_mpz_t(), rep.denominator.get_mpz_t(), d.get_mpz_t());
        if (d != 1 && !rep.offending_index) {
            rep.offending_index = j;
            rep.offending_image = std::move(image);
        }
    }
    rep.integral = rep.denominator == 1;
    return rep;
}

bool is_integral_reflection(const Lattice& L, const QVec& e)
{
    return reflection_integrality(L, e).integral;
}

std::vector<QVec> sign_normalize(const Lattice& L, const std::vector<QVec>& roots, const QVec& h)
{
    std::vector<QVec> out;
    out.reserve(roots.size());
    for (const auto& e : roots) {
        if (L.square(e) >= 0)
            throw Error("root list contains a vector of nonnegative square");
        Rational eh = L.pair(e, h);
        bool flip = eh < 0 || (eh == 0 && !lex_positive(e));
        out.push_back(flip ? negate(e) : e);
    }
    return out;
}

WeylWord make_word(const Lattice& L, const std::vector<QVec>& roots, std::vector<std::size_t> letters)
{
    WeylWord w;
    w.matrix = QMatrix::identity(L.rank());
    for (auto i : letters) {
        if (i >= roots.size())
            throw Error("Weyl word letter out of range");
        w.matrix = reflection(L, roots[i]) * w.matrix;
    }
    w.letters = std::move(letters);
    return w;
}

WeylWord inverse_word(const WeylWord& w)
{
    WeylWord inv;
    inv.letters.assign(w.letters.rbegin(), w.letters.rend());
    inv.matrix = inverse(w.matrix);
    return inv;
}

bool in_closed_chamber(const Lattice& L, const std::vector<QVec>& roots, const QVec& h, const QVec& x)
{
    for (const auto& e : sign_normalize(L, roots, h))
        if (L.pair(e, x) < 0)
            return false;
    return true;
}

namespace {

void check_reference(const Lattice& L, const QVec& h)
{
    if (L.square(h) <= 0)
        throw Error("reference vector must have positive square");
}

} // namespace

WalkResult chamber_walk(const Lattice& L, const std::vector<QVec>& roots, const QVec& alpha, const QVec& h,
                        std::size_t max_steps)
{
    check_reference(L, h);
    if (L.square(alpha) <= 0 || L.pair(alpha, h) <= 0)
        throw Error("chamber walk needs a vector of positive square in the component of the reference");
    const auto normalized = sign_normalize(L, roots, h);
    std::vector<QMatrix> reflections;
    reflections.reserve(normalized.size());
    for (const auto& e : normalized)
        reflections.push_back(reflection(L, e));

    WalkResult res;
    res.word.matrix = QMatrix::identity(L.rank());
    res.rep = alpha;
    for (std::size_t step = 0;; ++step) {
        std::size_t hit = normalized.size();
        for (std::size_t i = 0; i < normalized.size(); ++i)
            if (L.pair(normalized[i], res.rep) < 0) {
                hit = i;
                break;
            }
        if (hit == normalized.size())
            break;
        if (step == max_steps)
            throw Error("chamber walk did not terminate within " + std::to_string(max_steps) + " reflections");
        res.rep = reflections[hit] * res.rep;
        res.word.matrix = reflections[hit] * res.word.matrix;
        res.word.letters.push_back(hit);
    }
    return res;
}

QVec chamber_interior_point(const Lattice& L, const std::vector<QVec>& roots, const QVec& h)
{
    check_reference(L, h);
    const auto normalized = sign_normalize(L, roots, h);
    auto good = [&](const QVec& x) {
        if (L.square(x) <= 0 || L.pair(x, h) <= 0)
            return false;
        return std::all_of(normalized.begin(), normalized.end(),
                           [&](const QVec& e) { return L.pair(e, x) > 0; });
    };
    if (good(h))
        return h;
    // Roots orthogonal to h need a nudge off their walls: scan small
    // perturbations of growing multiples of h.
    const std::size_t n = L.rank();
    for (int radius = 1; radius <= 3; ++radius) {
        const int side = 2 * radius + 1;
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= static_cast<std::size_t>(side);
        for (int shift = 0; shift <= 12; ++shift) {
            const Rational mult = Rational(1) * (1 << shift);
            for (std::size_t code = 0; code < total; ++code) {
                QVec u(n);
                std::size_t c = code;
                for (std::size_t i = 0; i < n; ++i) {
                    u[i] = static_cast<long>(c % static_cast<std::size_t>(side)) - radius;
                    c /= static_cast<std::size_t>(side);
                }
                QVec x = add(scale(mult, h), u);
                if (good(x))
                    return x;
            }
        }
    }
    throw Error("could not find an interior point of the chamber");
}

Factorization weyl_factorize(const Lattice& L, const std::vector<QVec>& roots, const ZMatrix& g, const QVec& h)
{
    if (!is_isometry(L, g))
        throw Error("factorize: matrix is not an isometry");
    const QMatrix gq = to_rational(g);
    if (L.pair(gq * h, h) <= 0)
        throw Error("factorize: isometry exchanges the components of the positive cone");
    Factorization f;
    f.probe = chamber_interior_point(L, roots, h);
    WalkResult walk = chamber_walk(L, roots, gq * f.probe, h);
    // walk.word * g maps the probe back into the chamber
    f.chamber = walk.word.matrix * gq;
    f.weyl = inverse_word(walk.word);
    return f;
}

} // namespace conelat::roots
