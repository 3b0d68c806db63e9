#pragma once

// Integral lattices given by a Gram matrix in a fixed basis.  Vectors are
// coordinate vectors in that basis; nothing here uses floating point.

#include "conelat/arith.hpp"

#include <optional>
#include <string>
#include <utility>

namespace conelat {

class Lattice {
public:
    // Throws Error unless gram is square, symmetric and nondegenerate.
    explicit Lattice(QMatrix gram, std::string label = {});

    std::size_t rank() const { return gram_.rows(); }
    const QMatrix& gram() const { return gram_; }
    const QMatrix& gram_inverse() const { return gram_inverse_; }
    const std::string& label() const { return label_; }
    bool integral() const { return integral_; }
    // All diagonal entries even (implies integral).
    bool even() const;

    Rational pair(const QVec& u, const QVec& v) const;
    Rational square(const QVec& v) const { return pair(v, v); }

    // gram * v: the functional x -> pair(v, x) in dual coordinates.
    QVec functional(const QVec& v) const;

    void check_dimension(const QVec& v) const;

private:
    QMatrix gram_;
    QMatrix gram_inverse_;
    std::string label_;
    bool integral_ = false;
};

struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Congruence diagonalization over Q.
Signature signature(const Lattice& L);
Signature signature(const QMatrix& symmetric); // counts zeros in neither slot

// Pairing vector gram * c (homology -> cohomology side) and its inverse.
QVec dual_class(const Lattice& L, const QVec& c);
QVec dual_class_inverse(const Lattice& L, const QVec& functional);

// gcd of pair(v, b_i) over the basis; needs an integral Gram and v != 0.
Integer divisibility(const Lattice& L, const ZVec& v);

bool is_primitive(const ZVec& v);

// A sublattice given by an embedding (columns are basis vectors in ambient
// coordinates) together with the restricted Gram matrix, which may be
// degenerate or empty.
struct Sublattice {
    ZMatrix basis; // rank(L) x r
    QMatrix gram;  // r x r
    std::size_t rank() const { return basis.cols(); }
};

// Saturated sublattice {w in L : pair(w, s) = 0 for all s in S}.
Sublattice orthogonal_complement(const Lattice& L, const std::vector<QVec>& S);

// M^T gram M == gram and det M == +-1.
bool is_isometry(const Lattice& L, const ZMatrix& M);

// An integral isometry of a specific lattice, validated at construction.
class Isometry {
public:
    Isometry(const Lattice& L, ZMatrix matrix);

    const ZMatrix& matrix() const { return matrix_; }
    QVec apply(const QVec& v) const;
    // The inverse of an isometry is gram^-1 M^T gram, again integral.
    Isometry inverse(const Lattice& L) const;

    friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_; }

private:
    ZMatrix matrix_;
};

// Integer normal forms.

// Row-style Hermite normal form of the row space (zero rows dropped);
// pivots positive, entries above each pivot reduced into [0, pivot).
ZMatrix hermite_form(const ZMatrix& m);

// Nonzero elementary divisors d1 | d2 | ... of m.
ZVec smith_invariants(const ZMatrix& m);

// Basis of the integer right kernel {x in Z^n : m x = 0}; saturated by
// construction, returned in Hermite form (as rows).
std::vector<ZVec> integer_kernel(const ZMatrix& m);

} // namespace conelat
