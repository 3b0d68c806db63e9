#pragma once

// Bounded enumeration of primitive negative vectors in a hyperbolic lattice,
// relative to a positive base point h.

#include "conelat/cones.hpp"
#include "conelat/exactlat.hpp"

#include <vector>

namespace conelat::hunt {

struct Query {
    ZVec h;     // pair(h, h) > 0
    Rational B; // square bound: -B <= v^2 < 0
    Rational M; // height bound: 0 <= pair(v, h) <= M
};

struct Candidate {
    ZVec coords;
    Integer square;
    Integer height; // pair(v, h)
};

// Every primitive v with -B <= v^2 < 0 and |pair(v, h)| <= M, one per sign
// class (pair(v, h) >= 0, lexicographically positive when orthogonal to h).
// Sorted by height, then square, then coordinates.
std::vector<Candidate> enum_negative(const Lattice& L, const Query& q);

// Smallest rational of the form ceil(x * 1000) / 1000 whose square is
// >= t, found from an overshooting Newton iteration; exact when t is the
// square of a rational.
Rational sqrt_upper(const Rational& t);

// B * max over generators r of (pair(h, r)^2 / r^2 - h^2), clamped at 0:
// the square of the height bound for walls meeting the cone.
Rational cone_bound_squared(const Lattice& L, const cones::Cone& cone, const QVec& h, const Rational& B);

// sqrt_upper(cone_bound_squared) times `widen` (>= 1).
Rational cone_bound(const Lattice& L, const cones::Cone& cone, const QVec& h, const Rational& B,
                    const Rational& widen = 1);

// enum_negative with M = cone_bound, keeping the v whose orthogonal meets
// the cone.  The cone's reference vector is used as h and must be integral.
std::vector<Candidate> walls_meeting(const Lattice& L, const cones::Cone& cone, const Rational& B,
                                     const Rational& widen = 1);

} // namespace conelat::hunt
