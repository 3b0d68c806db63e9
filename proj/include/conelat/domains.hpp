#pragma once

// Dirichlet domains for finitely generated isometry groups acting on the
// positive cone, computed from truncated group balls, plus the exact
// rank-2 boundary-ray analysis.

#include "conelat/cones.hpp"
#include "conelat/exactlat.hpp"

#include <array>
#include <optional>
#include <vector>

namespace conelat::domains {

// All distinct products of at most `radius` generators and inverses,
// identity excluded; layer by layer, each layer sorted by matrix entries.
struct GroupBall {
    std::vector<Isometry> generators;
    QVec reference; // positive vector fixing the component
    std::size_t radius = 0;
    std::vector<Isometry> elements;
    std::vector<std::size_t> word_length; // per element
};

GroupBall ball(const Lattice& L, const std::vector<Isometry>& generators, std::size_t radius, const QVec& reference);

struct DomainHalfspace {
    std::size_t element; // index into the ball's elements
    QVec normal;         // pair(normal, x) >= 0  <=>  pair(x0, x) <= pair(x0, g x)
};

struct DirichletDomain {
    QVec x0;
    std::vector<DomainHalfspace> halfspaces; // one per ball element
    std::vector<std::size_t> active;         // indices into halfspaces
    bool reduced = false;     // redundancy elimination was run (rank <= 3)
    bool stabilized = false;  // same active normals at radius + 1
};

inline constexpr std::size_t kMaxReductionRank = 3;

// Throws if x0 is not positive or is fixed by some ball element.
DirichletDomain dirichlet_domain(const Lattice& L, const QVec& x0, const GroupBall& b);

// Active halfspace normals as lattice vectors.
std::vector<QVec> active_normals(const DirichletDomain& d);

// Position of x relative to the closed domain (inside the positive cone of
// the ball's reference vector).
cones::Position domain_position(const Lattice& L, const DirichletDomain& d, const QVec& reference, const QVec& x);

struct SampleHit {
    std::vector<long> closed;   // ball indices g with g(sample) in the domain, -1 = identity
    std::vector<long> interior; // those landing in the interior
};

struct TilingReport {
    std::size_t samples = 0;
    std::size_t covered = 0;
    std::size_t double_interior = 0;
    std::vector<SampleHit> hits;
    Rational coverage() const
    {
        if (!samples)
            return 1;
        Rational c{Integer(covered), Integer(samples)};
        c.canonicalize();
        return c;
    }
};

TilingReport tiles(const Lattice& L, const DirichletDomain& d, const GroupBall& b, const std::vector<QVec>& samples);

// a + b sqrt(d) with d > 0 not a perfect square.
struct QuadSurd {
    Rational a;
    Rational b;
    Integer d;
    int sign() const;
};

struct BoundaryRays {
    bool rational = false;
    Rational discriminant; // b^2 - a c = -det(gram); rays rational iff a square
    // rational case: primitive integral rays
    std::array<ZVec, 2> rays;
    // irrational case: ray coordinates as surds
    std::array<std::array<QuadSurd, 2>, 2> surd_rays;
};

// Finds a vector of positive square with small coordinates, deterministically.
QVec find_positive_vector(const Lattice& L);

// Isotropic rays of a rank-2 lattice of signature (1,1), oriented toward
// the component of `reference` (default: find_positive_vector).
BoundaryRays rank2_boundary_rays(const Lattice& L, std::optional<QVec> reference = std::nullopt);

// Integral isometry with det 1 and trace > 2 (infinite order, fixing both
// boundary rays), with |entries| <= bound; minimal trace first, then
// lexicographically smallest entries.  Throws when rays are rational or the
// search bound is exhausted.
Isometry rank2_isometry_generator(const Lattice& L, long bound = 50);

} // namespace conelat::domains
