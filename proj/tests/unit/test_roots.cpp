#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelat/roots.hpp"

#include "../support/configs.hpp"

using namespace conelat;
using oracle::qmatrix;
using oracle::qvec;

namespace {

Lattice elliptic() { return Lattice(qmatrix({{-2, 1, 1}, {1, 0, 0}, {1, 0, -2}})); }
const QVec s = qvec({1, 0, 0}), f = qvec({0, 1, 0}), e = qvec({0, 0, 1});
const QVec h_ell = qvec({1, 3, 0}); // s + 3f

} // namespace

TEST_CASE("reflection: worked values")
{
    Lattice M(qmatrix({{-2}}));
    CHECK(roots::reflection(M, qvec({1})) == qmatrix({{-1}}));

    Lattice L = elliptic();
    CHECK(roots::reflect(L, s, f) == add(f, s));
    CHECK(roots::reflect(L, s, s) == negate(s));
    // vectors orthogonal to s are fixed
    QVec w = add(s, scale(2, f));
    REQUIRE(L.pair(w, s) == 0);
    CHECK(roots::reflect(L, s, w) == w);

    Lattice U(qmatrix({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(roots::reflection(U, qvec({1, 0})), Error);
}

TEST_CASE("reflection laws on random roots")
{
    oracle::Rng rng(21);
    int tested = 0;
    while (tested < 100) {
        Lattice L(oracle::random_hyperbolic_gram(static_cast<std::size_t>(rng.uniform(2, 4)), rng));
        QVec r = oracle::random_vector(L.rank(), 4, rng);
        if (L.square(r) >= 0)
            continue;
        ++tested;
        QMatrix R = roots::reflection(L, r);
        const std::size_t n = L.rank();
        CHECK(R * R == QMatrix::identity(n));
        CHECK(R.transpose() * L.gram() * R == L.gram());
        CHECK(R * r == negate(r));
        Sublattice perp = orthogonal_complement(L, {r});
        for (std::size_t j = 0; j < perp.rank(); ++j) {
            QVec w = to_rational(perp.basis.column(j));
            CHECK(R * w == w);
        }
    }
}

TEST_CASE("integrality of reflections")
{
    Lattice L = elliptic();
    CHECK(roots::is_integral_reflection(L, s));
    CHECK(roots::is_integral_reflection(L, e));
    CHECK(roots::is_integral_reflection(L, qvec({1, 2, 2})));

    Lattice W(qmatrix({{-6, 1}, {1, 0}}));
    auto rep = roots::reflection_integrality(W, qvec({1, 0}));
    CHECK_FALSE(rep.integral);
    CHECK(rep.denominator == 3);
    REQUIRE(rep.offending_index.has_value());
    CHECK(*rep.offending_index == 1);
    CHECK(rep.offending_image == QVec{Rational(1, 3), Rational(1)});
    CHECK_FALSE(roots::is_integral_reflection(W, qvec({2, 0})));

    // every vector of square -2 in an even lattice reflects integrally
    oracle::Rng rng(22);
    int found = 0;
    for (int t = 0; t < 400 && found < 40; ++t) {
        QMatrix g = oracle::random_hyperbolic_gram(3, rng);
        bool even = true;
        for (std::size_t i = 0; i < 3; ++i)
            even = even && g(i, i).get_num() % 2 == 0;
        if (!even)
            continue;
        Lattice E(g);
        QVec v = oracle::random_vector(3, 3, rng);
        if (E.square(v) != -2)
            continue;
        ++found;
        CHECK(roots::is_integral_reflection(E, v));
        CHECK(roots::is_integral_reflection(E, scale(5, v)));
    }
    CHECK(found > 0);
}

TEST_CASE("chamber walk: basic cases")
{
    Lattice L = elliptic();
    // alpha already in the chamber
    QVec a0 = h_ell;
    auto r0 = roots::chamber_walk(L, {s, e}, a0, h_ell);
    CHECK(r0.word.letters.empty());
    CHECK(r0.rep == a0);

    // one crossing: s + 4f + e pairs -1 with e
    QVec a1 = qvec({1, 4, 1});
    auto r1 = roots::chamber_walk(L, {e}, a1, h_ell);
    CHECK(r1.word.letters == std::vector<std::size_t>{0});
    CHECK(r1.rep == roots::reflect(L, e, a1));

    auto r2 = roots::chamber_walk(L, {s, e}, a1, h_ell);
    for (const auto& r : {s, e})
        CHECK(L.pair(r, r2.rep) >= 0);
    CHECK(r2.word.matrix * a1 == r2.rep);

    // errors: negative alpha, non-root in the list, alpha in the other cone
    CHECK_THROWS_AS(roots::chamber_walk(L, {s, e}, s, h_ell), Error);
    CHECK_THROWS_AS(roots::chamber_walk(L, {s, f}, a1, h_ell), Error);
    CHECK_THROWS_AS(roots::chamber_walk(L, {s, e}, negate(a1), h_ell), Error);
    // the class s + 2e + 2f has square -2 and is not a walk input
    CHECK_THROWS_AS(roots::chamber_walk(L, {s, e}, qvec({1, 2, 2}), h_ell), Error);
}

TEST_CASE("chamber walk on closed root systems")
{
    oracle::Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        auto c = oracle::random_config(rng);
        Lattice L(c.gram);
        QVec alpha = oracle::random_positive(c, rng);
        auto res = roots::chamber_walk(L, c.roots, alpha, c.h);
        CHECK(roots::in_closed_chamber(L, c.roots, c.h, res.rep));
        CHECK(res.word.matrix * alpha == res.rep);
        auto again = roots::chamber_walk(L, c.roots, res.rep, c.h);
        CHECK(again.word.letters.empty());
        // shuffled and sign-flipped roots give the same representative
        std::vector<QVec> shuffled = c.roots;
        rng.shuffle(shuffled);
        for (auto& r : shuffled)
            if (rng.coin())
                r = negate(r);
        CHECK(roots::chamber_walk(L, shuffled, alpha, c.h).rep == res.rep);
    }
}

TEST_CASE("weyl factorization")
{
    oracle::Rng rng(24);
    auto c = oracle::make_config({"A2"}, 1, rng);
    Lattice L(c.gram);
    // g = R_e gives the single letter and b = identity
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
        ZMatrix g = oracle::word_matrix(c, {i});
        auto fac = roots::weyl_factorize(L, c.roots, g, c.h);
        CHECK(fac.weyl.matrix == to_rational(g));
        CHECK(fac.chamber == QMatrix::identity(L.rank()));
    }
    // g fixing the chamber gives the empty word
    REQUIRE(c.symmetries.size() == 1);
    auto fb = roots::weyl_factorize(L, c.roots, c.symmetries[0], c.h);
    CHECK(fb.weyl.letters.empty());
    CHECK(fb.chamber == to_rational(c.symmetries[0]));

    for (int t = 0; t < 40; ++t) {
        auto cfg = oracle::random_config(rng);
        Lattice K(cfg.gram);
        std::vector<std::size_t> letters;
        const long len = rng.uniform(0, 6);
        for (long k = 0; k < len; ++k)
            letters.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cfg.roots.size()) - 1)));
        ZMatrix b0 = ZMatrix::identity(K.rank());
        for (const auto& sym : cfg.symmetries)
            if (rng.coin())
                b0 = sym * b0;
        ZMatrix w0 = oracle::word_matrix(cfg, letters);
        ZMatrix g = w0 * b0;
        auto fac = roots::weyl_factorize(K, cfg.roots, g, cfg.h);
        CHECK(fac.weyl.matrix * fac.chamber == to_rational(g));
        CHECK(fac.weyl.matrix == to_rational(w0));
        CHECK(fac.chamber == to_rational(b0));
        CHECK(roots::in_closed_chamber(K, cfg.roots, cfg.h, fac.chamber * fac.probe));
    }

    Lattice E = elliptic();
    CHECK_THROWS_AS(roots::weyl_factorize(E, {s, e}, oracle::zmatrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), h_ell),
                    Error);
    ZMatrix minus = ZMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
        minus(i, i) = -1;
    CHECK_THROWS_AS(roots::weyl_factorize(E, {s, e}, minus, h_ell), Error);
}

TEST_CASE("sign normalization")
{
    Lattice L = elliptic();
    auto n = roots::sign_normalize(L, {negate(s), e}, h_ell);
    CHECK(n[0] == s);
    CHECK(n[1] == e);
    CHECK_THROWS_AS(roots::sign_normalize(L, {f}, h_ell), Error);
}
