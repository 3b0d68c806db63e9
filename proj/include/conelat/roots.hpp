#pragma once

// Reflections in negative vectors and walks through the chamber structure
// they cut out of the positive cone.

#include "conelat/exactlat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace conelat::roots {

// x -> x - 2 pair(e, x) / pair(e, e) * e, as a rational matrix acting on
// coordinate columns.  Throws on isotropic e.
QMatrix reflection(const Lattice& L, const QVec& e);
QVec reflect(const Lattice& L, const QVec& e, const QVec& x);

struct IntegralityReport {
    bool integral = true;
    // lcm of the denominators of all basis images
    Integer denominator = 1;
    // first basis vector whose image is not integral, with that image
    std::optional<std::size_t> offending_index;
    QVec offending_image;
};

IntegralityReport reflection_integrality(const Lattice& L, const QVec& e);
bool is_integral_reflection(const Lattice& L, const QVec& e);

// Flips each root so that pair(e, h) >= 0, using lexicographic positivity of
// the coordinates when pair(e, h) == 0.  Throws if some pair(e, e) >= 0.
std::vector<QVec> sign_normalize(const Lattice& L, const std::vector<QVec>& roots, const QVec& h);

// A product of reflections.  letters index into the root list the word was
// built from; they are applied first to last, so
// matrix = R[letters.back()] * ... * R[letters.front()].
struct WeylWord {
    std::vector<std::size_t> letters;
    QMatrix matrix;
};

WeylWord make_word(const Lattice& L, const std::vector<QVec>& roots, std::vector<std::size_t> letters);

// The same element read backwards, i.e. the inverse isometry.
WeylWord inverse_word(const WeylWord& w);

// pair(e, x) >= 0 for every root (after sign normalization against h).
bool in_closed_chamber(const Lattice& L, const std::vector<QVec>& roots, const QVec& h, const QVec& x);

struct WalkResult {
    WeylWord word; // rep == word.matrix * alpha
    QVec rep;
};

// Repeatedly reflects alpha in the first root (input order) it pairs
// negatively with, until it lies in the closed chamber of h.  Points on a
// wall count as inside.  max_steps guards root sets whose reflection group
// does not act discretely.
WalkResult chamber_walk(const Lattice& L, const std::vector<QVec>& roots, const QVec& alpha, const QVec& h,
                        std::size_t max_steps = 100000);

// A rational point pairing strictly positively with every root, positive
// square and in the component of h.  Returns h itself when h qualifies.
QVec chamber_interior_point(const Lattice& L, const std::vector<QVec>& roots, const QVec& h);

struct Factorization {
    WeylWord weyl;    // w
    QMatrix chamber;  // b, with g = w * b
    QVec probe;       // interior point used for the walk
};

// Splits g as w * b with w in the group generated by the root reflections
// and b mapping the fundamental chamber to itself.
Factorization weyl_factorize(const Lattice& L, const std::vector<QVec>& roots, const ZMatrix& g, const QVec& h);

} // namespace conelat::roots
