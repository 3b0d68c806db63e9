#pragma once

// Numerical Zariski decomposition of a class against a finite set of
// negative roots with pairwise nonnegative intersections.

#include "conelat/exactlat.hpp"

#include <vector>

namespace conelat::zariski {

struct Decomposition {
    QVec positive;             // P
    QVec negative;             // N = sum coefficients[i] * roots[i]
    QVec coefficients;         // one nonnegative entry per input root
    std::vector<std::size_t> support; // indices with coefficient > 0, ascending
    Rational positive_square;  // q(P)
    Rational class_square;     // q(D)
};

// Leading principal minors of the Gram matrix of `vectors` alternate in sign
// starting negative.
bool negative_definite(const Lattice& L, const std::vector<QVec>& vectors);

// Throws Error if a root has nonnegative square, two distinct roots pair
// negatively, or the support would need a non negative-definite Gram.
Decomposition decompose(const Lattice& L, const QVec& D, const std::vector<QVec>& roots);

struct SeReport {
    bool member = false;      // pair(alpha, ell) > 0
    Decomposition decomposition;
    Rational pair_total;      // pair(alpha, ell)
    Rational pair_positive;   // pair(alpha, P(ell))
    Rational pair_negative;   // pair(alpha, N(ell))
    bool negative_part_nonzero = false;
    // pair(alpha, ell) >= pair(alpha, N(ell)) whenever pair(alpha, P(ell)) >= 0
    bool chain_holds = false;
};

// Tests whether alpha pairs positively with the negative class ell, and
// records how the pairing splits over the Zariski parts of ell.
SeReport se_membership(const Lattice& L, const QVec& alpha, const QVec& ell, const std::vector<QVec>& roots);

} // namespace conelat::zariski
