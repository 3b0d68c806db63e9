#include "conelat/cones.hpp"

#include "conelat/roots.hpp"

#include <algorithm>
#include <set>

namespace conelat::cones {

const char* to_string(Position p)
{
    switch (p) {
    case Position::interior:
        return "interior";
    case Position::boundary:
        return "boundary";
    case Position::outside:
        return "outside";
    }
    return "?";
}

Cone Cone::from_generators(std::vector<QVec> generators, QVec reference)
{
    Cone c;
    c.generators = std::move(generators);
    c.reference = std::move(reference);
    c.authority = Authority::generators;
    return c;
}

Cone Cone::from_halfspaces(std::vector<QVec> halfspaces, QVec reference, bool strict)
{
    Cone c;
    c.strict.assign(halfspaces.size(), strict);
    c.halfspaces = std::move(halfspaces);
    c.reference = std::move(reference);
    c.authority = Authority::halfspaces;
    return c;
}

namespace {

// Visits every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f)
{
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

QVec primitive(const QVec& v)
{
    return to_rational(primitive_direction(v));
}

void check_rank(const Lattice& L)
{
    if (L.rank() > kMaxConversionRank)
        throw Error("halfspace/ray conversion is limited to rank " + std::to_string(kMaxConversionRank));
}

QVec functional_to_normal(const Lattice& L, const QVec& phi)
{
    return primitive(dual_class_inverse(L, phi));
}

} // namespace

DualDescription solve_constraints(const std::vector<QVec>& constraints, std::size_t dim)
{
    std::vector<QVec> rows;
    for (const auto& a : constraints) {
        if (a.size() != dim)
            throw Error("constraint dimension mismatch");
        if (!is_zero(a))
            rows.push_back(a);
    }
    DualDescription out;
    if (rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            QVec e(dim);
            e[i] = 1;
            out.lineality.push_back(std::move(e));
        }
        return out;
    }
    for (const auto& k : kernel(QMatrix::from_rows(rows, dim)))
        out.lineality.push_back(primitive(k));

    // basis of the row space, picked greedily
    std::vector<QVec> basis;
    for (const auto& a : rows) {
        std::vector<QVec> trial = basis;
        trial.push_back(a);
        if (rank(QMatrix::from_rows(trial, dim)) == trial.size())
            basis = std::move(trial);
    }
    const std::size_t r = basis.size();
    // constraints in coordinates t of w = sum t_k basis_k
    std::vector<QVec> reduced;
    for (const auto& a : rows) {
        QVec c(r);
        for (std::size_t k = 0; k < r; ++k)
            c[k] = dot(a, basis[k]);
        reduced.push_back(std::move(c));
    }
    auto feasible = [&](const QVec& t) {
        return std::all_of(reduced.begin(), reduced.end(), [&](const QVec& c) { return dot(c, t) >= 0; });
    };
    std::set<std::vector<Integer>> seen;
    for_each_subset(reduced.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
        QVec z;
        if (r == 1) {
            z = QVec{1};
        } else {
            std::vector<QVec> sub;
            for (auto i : idx)
                sub.push_back(reduced[i]);
            auto ker = kernel(QMatrix::from_rows(sub, r));
            if (ker.size() != 1)
                return;
            z = ker[0];
        }
        for (int sgn : {1, -1}) {
            QVec t = scale(Rational(sgn), z);
            if (!feasible(t))
                continue;
            QVec w(dim);
            for (std::size_t k = 0; k < r; ++k)
                w = add(w, scale(t[k], basis[k]));
            ZVec p = primitive_direction(w);
            if (seen.insert(p).second)
                out.rays.push_back(to_rational(p));
        }
    });
    std::sort(out.rays.begin(), out.rays.end(), [](const QVec& a, const QVec& b) { return b < a; });
    return out;
}

std::vector<QVec> halfspaces_of(const Lattice& L, const std::vector<QVec>& generators)
{
    check_rank(L);
    if (generators.empty())
        throw Error("cone has no generators");
    for (const auto& g : generators)
        L.check_dimension(g);
    auto dual = solve_constraints(generators, L.rank());
    std::vector<QVec> functionals = dual.rays;
    for (const auto& l : dual.lineality) {
        functionals.push_back(l);
        functionals.push_back(negate(l));
    }
    if (functionals.empty() || rank(QMatrix::from_rows(functionals, L.rank())) < L.rank())
        throw Error("cone contains a line");
    std::vector<QVec> normals;
    for (const auto& phi : functionals)
        normals.push_back(functional_to_normal(L, phi));
    return normals;
}

std::vector<QVec> rays_of(const Lattice& L, const std::vector<QVec>& halfspaces)
{
    check_rank(L);
    std::vector<QVec> functionals;
    for (const auto& n : halfspaces)
        functionals.push_back(L.functional(n));
    auto dual = solve_constraints(functionals, L.rank());
    if (!dual.lineality.empty())
        throw Error("cone contains a line");
    return dual.rays;
}

Cone completed(const Lattice& L, const Cone& c)
{
    Cone out = c;
    if (c.positive_cone)
        return out;
    if (out.halfspaces.empty() && !out.generators.empty()) {
        out.halfspaces = halfspaces_of(L, out.generators);
        out.strict.assign(out.halfspaces.size(), false);
    } else if (out.generators.empty() && !out.halfspaces.empty()) {
        out.generators = rays_of(L, out.halfspaces);
    }
    if (!out.generators.empty() && !out.halfspaces.empty())
        out.authority = Authority::both;
    return out;
}

Position contains(const Lattice& L, const Cone& c, const QVec& x)
{
    L.check_dimension(x);
    std::vector<QVec> halfspaces = c.halfspaces;
    if (halfspaces.empty() && !c.generators.empty())
        halfspaces = halfspaces_of(L, c.generators);
    Position pos = Position::interior;
    for (const auto& n : halfspaces) {
        Rational p = L.pair(n, x);
        if (p < 0)
            return Position::outside;
        if (p == 0)
            pos = Position::boundary;
    }
    if (c.positive_cone) {
        Rational q = L.square(x);
        Rational ph = L.pair(x, c.reference);
        if (q < 0 || ph < 0 || (q > 0 && ph == 0))
            return Position::outside;
        if (q == 0)
            pos = Position::boundary;
    }
    return pos;
}

Cone fundamental_exceptional_chamber(const Lattice& L, const std::vector<QVec>& roots, const QVec& h)
{
    if (L.square(h) <= 0)
        throw Error("reference vector must have positive square");
    Cone c = Cone::from_halfspaces(roots::sign_normalize(L, roots, h), h, true);
    c.positive_cone = true;
    return c;
}

bool wall_meets_cone(const Lattice& L, const QVec& v, const Cone& c)
{
    std::vector<QVec> gens = c.generators;
    if (gens.empty() && !c.positive_cone && !c.halfspaces.empty())
        gens = rays_of(L, c.halfspaces);
    if (gens.empty())
        throw Error("wall test needs a cone with generators");
    bool has_nonpos = false, has_nonneg = false;
    for (const auto& g : gens) {
        Rational p = L.pair(v, g);
        has_nonpos = has_nonpos || p <= 0;
        has_nonneg = has_nonneg || p >= 0;
    }
    return has_nonpos && has_nonneg;
}

std::vector<Piece> subdivide(const Lattice& L, const Cone& c, const std::vector<QVec>& walls)
{
    check_rank(L);
    if (c.positive_cone)
        throw Error("subdivision needs a polyhedral cone");
    for (const auto& w : walls)
        if (L.square(w) >= 0)
            throw Error("walls must have negative square");
    const Cone base = completed(L, c);
    if (base.generators.empty())
        throw Error("cannot subdivide an empty cone");

    struct Cell {
        std::vector<QVec> halfspaces;
        std::vector<QVec> rays;
    };
    std::vector<Cell> cells{{base.halfspaces, base.generators}};
    for (const auto& w : walls) {
        std::vector<Cell> next;
        for (auto& cell : cells) {
            bool neg = false, posv = false;
            for (const auto& r : cell.rays) {
                Rational p = L.pair(w, r);
                neg = neg || p < 0;
                posv = posv || p > 0;
            }
            if (!(neg && posv)) {
                next.push_back(std::move(cell));
                continue;
            }
            for (const QVec& side : {w, negate(w)}) {
                Cell piece{cell.halfspaces, {}};
                piece.halfspaces.push_back(side);
                piece.rays = rays_of(L, piece.halfspaces);
                next.push_back(std::move(piece));
            }
        }
        cells = std::move(next);
    }

    std::vector<Piece> pieces;
    for (auto& cell : cells) {
        Piece p;
        p.witness = QVec(L.rank());
        for (const auto& r : cell.rays)
            p.witness = add(p.witness, r);
        for (const auto& w : walls) {
            Rational s = L.pair(w, p.witness);
            p.signs.push_back(s > 0 ? 1 : s < 0 ? -1 : 0);
        }
        p.cone.generators = std::move(cell.rays);
        p.cone.halfspaces = std::move(cell.halfspaces);
        p.cone.strict.assign(p.cone.halfspaces.size(), false);
        p.cone.reference = c.reference;
        p.cone.authority = Authority::both;
        pieces.push_back(std::move(p));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.signs < b.signs; });
    return pieces;
}

} // namespace conelat::cones
