#pragma once

// Rational polyhedral cones inside a lattice, described by rays and/or
// halfspaces.  A halfspace is stored as a lattice vector n meaning
// pair(n, x) >= 0, so walls of roots are just the roots themselves.

#include "conelat/exactlat.hpp"

#include <vector>

namespace conelat::cones {

// Rank above which halfspace/ray conversion is refused.
inline constexpr std::size_t kMaxConversionRank = 4;

enum class Position { interior, boundary, outside };
const char* to_string(Position p);

enum class Authority { generators, halfspaces, both };

struct Cone {
    std::vector<QVec> generators;
    std::vector<QVec> halfspaces;
    std::vector<bool> strict; // one flag per halfspace
    QVec reference;           // positive vector picking the component of Pos
    // Also cut by the positive cone component of `reference` (not polyhedral).
    bool positive_cone = false;
    Authority authority = Authority::generators;

    static Cone from_generators(std::vector<QVec> generators, QVec reference);
    static Cone from_halfspaces(std::vector<QVec> halfspaces, QVec reference, bool strict = false);
};

// --- plain polyhedral geometry in dual coordinates ---------------------------

// {x in Q^dim : a . x >= 0 for all a} = span(lineality) + cone(rays), with
// rays primitive, deduplicated and in a deterministic order.
struct DualDescription {
    std::vector<QVec> lineality;
    std::vector<QVec> rays;
};
DualDescription solve_constraints(const std::vector<QVec>& constraints, std::size_t dim);

// --- lattice-level operations -------------------------------------------------

// Closed halfspaces (pairing normals) of the cone generated by `generators`;
// equations of a lower-dimensional span appear as +-n pairs.  Throws above
// kMaxConversionRank or for a cone containing a line.
std::vector<QVec> halfspaces_of(const Lattice& L, const std::vector<QVec>& generators);

// Extreme rays of {x : pair(n, x) >= 0}; throws if that cone contains a line.
std::vector<QVec> rays_of(const Lattice& L, const std::vector<QVec>& halfspaces);

// Fills in whichever description is missing (rank <= 4).
Cone completed(const Lattice& L, const Cone& c);

Position contains(const Lattice& L, const Cone& c, const QVec& x);

// {pair(e, .) > 0 : e in roots} inside Pos, roots sign-normalized against h.
// With no roots this is the positive cone itself.
Cone fundamental_exceptional_chamber(const Lattice& L, const std::vector<QVec>& roots, const QVec& h);

// min_g pair(v, g) <= 0 <= max_g pair(v, g) over the generators.
bool wall_meets_cone(const Lattice& L, const QVec& v, const Cone& c);

struct Piece {
    Cone cone;              // closed, with both descriptions
    QVec witness;           // relative interior point (sum of rays)
    std::vector<int> signs; // sign of pair(wall, witness) per input wall
};

// Cells of the wall arrangement inside c, ordered lexicographically by sign
// vector.  c must be polyhedral and of rank <= 4.
std::vector<Piece> subdivide(const Lattice& L, const Cone& c, const std::vector<QVec>& walls);

} // namespace conelat::cones
