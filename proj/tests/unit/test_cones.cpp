#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelat/cones.hpp"
#include "conelat/roots.hpp"

#include "../support/oracles.hpp"

using namespace conelat;
using namespace conelat::cones;
using oracle::qmatrix;
using oracle::qvec;

namespace {

Lattice elliptic() { return Lattice(qmatrix({{-2, 1, 1}, {1, 0, 0}, {1, 0, -2}})); }
Lattice diag2() { return Lattice(qmatrix({{2, 0}, {0, -2}})); }
const QVec s = qvec({1, 0, 0}), f = qvec({0, 1, 0}), e = qvec({0, 0, 1});
const QVec h_ell = qvec({1, 3, 0});

} // namespace

TEST_CASE("containment")
{
    Lattice L = diag2();
    Cone c = Cone::from_generators({qvec({1, 0}), qvec({1, 1})}, qvec({1, 0}));
    CHECK(contains(L, c, qvec({2, 1})) == Position::interior);
    CHECK(contains(L, c, qvec({1, 1})) == Position::boundary);
    CHECK(contains(L, c, qvec({3, 0})) == Position::boundary);
    CHECK(contains(L, c, qvec({1, 2})) == Position::outside);
    CHECK(contains(L, c, qvec({1, -1})) == Position::outside);

    // positive cone marker: h is interior, isotropic vectors are boundary
    Cone pos = fundamental_exceptional_chamber(L, {}, qvec({1, 0}));
    CHECK(pos.positive_cone);
    CHECK(contains(L, pos, qvec({1, 0})) == Position::interior);
    CHECK(contains(L, pos, qvec({1, 1})) == Position::boundary);
    CHECK(contains(L, pos, qvec({-1, 0})) == Position::outside);
}

TEST_CASE("halfspace and ray conversion")
{
    Lattice L = elliptic();
    std::vector<QVec> gens = {qvec({1, 3, 0}), qvec({1, 4, 1}), qvec({2, 5, 1})};
    auto hs = halfspaces_of(L, gens);
    for (const auto& g : gens)
        for (const auto& n : hs)
            CHECK(L.pair(n, g) >= 0);
    auto back = rays_of(L, hs);
    CHECK(back.size() == 3);
    for (const auto& r : back) {
        bool matched = false;
        for (const auto& g : gens)
            matched = matched || primitive_direction(g) == primitive_direction(r);
        CHECK(matched);
    }
    // a redundant generator does not change the facets
    auto gens2 = gens;
    gens2.push_back(add(gens[0], gens[1]));
    CHECK(halfspaces_of(L, gens2).size() == hs.size());
    CHECK_THROWS_AS(halfspaces_of(L, {qvec({1, 0, 0}), qvec({-1, 0, 0})}), Error);
    Lattice big(QMatrix::identity(5));
    CHECK_THROWS_AS(halfspaces_of(big, {qvec({1, 0, 0, 0, 0})}), Error);
}

TEST_CASE("fundamental exceptional chamber")
{
    Lattice L = elliptic();
    Cone fe1 = fundamental_exceptional_chamber(L, {s}, h_ell);
    CHECK(fe1.halfspaces.size() == 1);
    CHECK(fe1.strict[0]);
    Cone fe = fundamental_exceptional_chamber(L, {s, e}, h_ell);
    QVec a = add(scale(3, f), s);
    CHECK(L.pair(s, a) == 1);
    CHECK(L.pair(e, a) == 1);
    CHECK(contains(L, fe, a) == Position::interior);
    // on the wall of e: strict chamber puts it on the boundary
    QVec w = qvec({1, 4, 1}); // pair(e, w) = -1
    CHECK(contains(L, fe, w) == Position::outside);
    CHECK(contains(L, fe, roots::reflect(L, e, w)) == Position::interior);
    // roots given with the wrong sign are normalized
    Cone fe2 = fundamental_exceptional_chamber(L, {negate(s), e}, h_ell);
    CHECK(fe2.halfspaces == fe.halfspaces);
    // interior points walk to themselves
    CHECK(roots::chamber_walk(L, {s, e}, a, h_ell).word.letters.empty());
}

TEST_CASE("walls meeting a cone")
{
    Lattice L = diag2();
    Cone c = Cone::from_generators({qvec({1, 0}), qvec({3, 1})}, qvec({1, 0}));
    CHECK(wall_meets_cone(L, qvec({0, 1}), c));
    Cone c2 = Cone::from_generators({qvec({2, 1}), qvec({2, -1})}, qvec({1, 0}));
    CHECK(wall_meets_cone(L, qvec({0, 1}), c2));
    CHECK_FALSE(wall_meets_cone(L, qvec({1, 0}), c2)); // pairs 4 with both generators
    CHECK_THROWS_AS(wall_meets_cone(L, qvec({0, 1}), Cone::from_generators({}, qvec({1, 0}))), Error);
}

TEST_CASE("subdivision")
{
    Lattice L = diag2();
    Cone c = Cone::from_generators({qvec({2, 1}), qvec({2, -1})}, qvec({1, 0}));
    CHECK(subdivide(L, c, {}).size() == 1);
    CHECK(subdivide(L, c, {qvec({0, 1})}).size() == 2);
    // three distinct walls through the interior: (x, y) with y/x = 0, 1/4, -1/4
    std::vector<QVec> walls = {qvec({0, 1}), qvec({1, 4}), qvec({1, -4})};
    for (const auto& w : walls)
        REQUIRE(L.square(w) < 0);
    auto pieces = subdivide(L, c, walls);
    CHECK(pieces.size() == 4);
    // signs are constant on each piece and pieces are ordered by sign vector
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t k = 0; k < walls.size(); ++k)
            for (const auto& g : pieces[i].cone.generators)
                CHECK(L.pair(walls[k], g) * pieces[i].signs[k] >= 0);
        if (i > 0)
            CHECK(pieces[i - 1].signs < pieces[i].signs);
    }
    // rational samples: every sample lies in some piece, no sample is
    // interior to two
    for (long a = -10; a <= 10; ++a) {
        QVec x = add(scale(Rational(10 + a), qvec({2, 1})), scale(Rational(10 - a), qvec({2, -1})));
        int closed = 0, interior = 0;
        for (const auto& p : pieces) {
            auto pos = contains(L, p.cone, x);
            closed += pos != Position::outside;
            interior += pos == Position::interior;
        }
        CHECK(closed >= 1);
        CHECK(interior <= 1);
    }
}

TEST_CASE("subdivision in rank 3")
{
    Lattice L = elliptic();
    Cone c = Cone::from_generators({qvec({1, 3, 0}), qvec({1, 5, 1}), qvec({2, 5, 1}), qvec({1, 4, 0})}, h_ell);
    std::vector<QVec> walls;
    for (const auto& w : {qvec({0, 1, -1}), qvec({1, 0, 1}), qvec({0, 2, -1})})
        if (wall_meets_cone(L, w, c))
            walls.push_back(w);
    auto pieces = subdivide(L, c, walls);
    CHECK(pieces.size() >= 1);
    oracle::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        QVec x(3);
        for (const auto& g : c.generators)
            x = add(x, scale(Rational(rng.uniform(0, 5)), g));
        if (is_zero(x))
            continue;
        int closed = 0, interior = 0;
        for (const auto& p : pieces) {
            auto pos = contains(L, p.cone, x);
            closed += pos != Position::outside;
            interior += pos == Position::interior;
        }
        CHECK(closed >= 1);
        CHECK(interior <= 1);
    }
    Lattice big(QMatrix::identity(5));
    CHECK_THROWS_AS(subdivide(big, Cone::from_generators({qvec({1, 0, 0, 0, 0})}, qvec({1, 0, 0, 0, 0})), {}),
                    Error);
}
