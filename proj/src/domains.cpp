#include "conelat/domains.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace conelat::domains {

GroupBall ball(const Lattice& L, const std::vector<Isometry>& generators, std::size_t radius, const QVec& reference)
{
    if (L.square(reference) <= 0)
        throw Error("reference vector must have positive square");
    GroupBall b;
    b.generators = generators;
    b.reference = reference;
    b.radius = radius;

    std::vector<ZMatrix> letters;
    for (const auto& g : generators) {
        if (g.matrix().rows() != L.rank())
            throw Error("generator has the wrong size");
        if (L.pair(g.apply(reference), reference) <= 0)
            throw Error("generator exchanges the components of the positive cone");
        letters.push_back(g.matrix());
        Isometry inv = g.inverse(L);
        if (!(inv == g))
            letters.push_back(inv.matrix());
    }

    const ZMatrix id = ZMatrix::identity(L.rank());
    std::set<ZVec> seen{id.data()};
    std::vector<ZMatrix> layer{id};
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<ZMatrix> next;
        for (const auto& x : layer)
            for (const auto& s : letters) {
                ZMatrix y = s * x;
                if (seen.insert(y.data()).second)
                    next.push_back(std::move(y));
            }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end(), [](const ZMatrix& p, const ZMatrix& q) { return p.data() < q.data(); });
        for (const auto& m : next) {
            b.elements.emplace_back(L, m);
            b.word_length.push_back(len);
        }
        layer = std::move(next);
    }
    return b;
}

namespace {

struct ActiveSet {
    std::vector<DomainHalfspace> halfspaces;
    std::vector<std::size_t> active;
    bool reduced = false;
};

ActiveSet compute_active(const Lattice& L, const QVec& x0, const GroupBall& b)
{
    if (L.square(x0) <= 0 || L.pair(x0, b.reference) <= 0)
        throw Error("base point must lie in the positive cone");
    ActiveSet out;
    std::set<ZVec> directions;
    std::vector<std::size_t> distinct;
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
        // pair(x0, g x) = pair(g^-1 x0, x)
        const QVec moved = b.elements[k].inverse(L).apply(x0);
        if (moved == x0)
            throw Error("base point is fixed by a nontrivial ball element");
        ZVec dir = primitive_direction(sub(moved, x0));
        out.halfspaces.push_back({k, to_rational(dir)});
        if (directions.insert(dir).second)
            distinct.push_back(k);
    }
    const std::size_t n = L.rank();
    if (n > kMaxReductionRank || distinct.empty()) {
        out.active = distinct;
        out.reduced = n <= kMaxReductionRank;
        return out;
    }
    std::vector<QVec> functionals;
    for (auto k : distinct)
        functionals.push_back(L.functional(out.halfspaces[k].normal));
    const auto dual = cones::solve_constraints(functionals, n);
    // a halfspace is irredundant iff its face has codimension one
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        std::vector<QVec> face = dual.lineality;
        for (const auto& r : dual.rays)
            if (dot(functionals[i], r) == 0)
                face.push_back(r);
        std::size_t dim = face.empty() ? 0 : rank(QMatrix::from_rows(face, n));
        if (dim == n - 1)
            out.active.push_back(distinct[i]);
    }
    out.reduced = true;
    return out;
}

std::set<ZVec> normal_set(const ActiveSet& a)
{
    std::set<ZVec> s;
    for (auto k : a.active)
        s.insert(to_integer(a.halfspaces[k].normal));
    return s;
}

} // namespace

DirichletDomain dirichlet_domain(const Lattice& L, const QVec& x0, const GroupBall& b)
{
    ActiveSet cur = compute_active(L, x0, b);
    GroupBall bigger = ball(L, b.generators, b.radius + 1, b.reference);
    ActiveSet grown = compute_active(L, x0, bigger);

    DirichletDomain d;
    d.x0 = x0;
    d.halfspaces = std::move(cur.halfspaces);
    d.active = std::move(cur.active);
    d.reduced = cur.reduced;
    ActiveSet tmp;
    tmp.halfspaces = d.halfspaces;
    tmp.active = d.active;
    d.stabilized = normal_set(tmp) == normal_set(grown);
    return d;
}

std::vector<QVec> active_normals(const DirichletDomain& d)
{
    std::vector<QVec> out;
    for (auto k : d.active)
        out.push_back(d.halfspaces[k].normal);
    return out;
}

cones::Position domain_position(const Lattice& L, const DirichletDomain& d, const QVec& reference, const QVec& x)
{
    cones::Cone c = cones::Cone::from_halfspaces(active_normals(d), reference);
    c.positive_cone = true;
    return cones::contains(L, c, x);
}

TilingReport tiles(const Lattice& L, const DirichletDomain& d, const GroupBall& b, const std::vector<QVec>& samples)
{
    TilingReport rep;
    rep.samples = samples.size();
    for (const auto& s : samples) {
        SampleHit hit;
        std::set<QVec> interior_images;
        for (long k = -1; k < static_cast<long>(b.elements.size()); ++k) {
            QVec y = k < 0 ? s : b.elements[static_cast<std::size_t>(k)].apply(s);
            auto pos = domain_position(L, d, b.reference, y);
            if (pos == cones::Position::outside)
                continue;
            hit.closed.push_back(k);
            if (pos == cones::Position::interior) {
                hit.interior.push_back(k);
                interior_images.insert(y);
            }
        }
        if (!hit.closed.empty())
            ++rep.covered;
        if (interior_images.size() > 1)
            ++rep.double_interior;
        rep.hits.push_back(std::move(hit));
    }
    return rep;
}

int QuadSurd::sign() const
{
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0 || sa == sb)
        return sa != 0 ? sa : sb;
    if (sa == 0)
        return sb;
    // opposite signs: compare a^2 with b^2 d
    const Rational lhs = a * a, rhs = b * b * d;
    if (lhs > rhs)
        return sa;
    if (lhs < rhs)
        return sb;
    return 0;
}

QVec find_positive_vector(const Lattice& L)
{
    const std::size_t n = L.rank();
    for (std::size_t i = 0; i < n; ++i) {
        QVec e(n);
        e[i] = 1;
        if (L.square(e) > 0)
            return e;
    }
    for (int radius = 1; radius <= 4; ++radius) {
        const int side = 2 * radius + 1;
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= static_cast<std::size_t>(side);
        for (std::size_t code = 0; code < total; ++code) {
            QVec v(n);
            std::size_t c = code;
            for (std::size_t i = n; i-- > 0;) {
                v[i] = static_cast<long>(c % static_cast<std::size_t>(side)) - radius;
                c /= static_cast<std::size_t>(side);
            }
            if (L.square(v) > 0 && lex_positive(v))
                return v;
        }
    }
    throw Error("no vector of positive square with small coordinates");
}

namespace {

void check_hyperbolic_plane(const Lattice& L)
{
    if (L.rank() != 2)
        throw Error("rank-2 analysis needs a rank-2 lattice");
    if (!(signature(L) == Signature{1, 1}))
        throw Error("rank-2 analysis needs signature (1,1)");
}

bool rational_sqrt(const Rational& t, Rational& root)
{
    Integer rn, rd;
    if (t < 0)
        return false;
    mpz_sqrt(rn.get_mpz_t(), t.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), t.get_den_mpz_t());
    if (rn * rn != t.get_num() || rd * rd != t.get_den())
        return false;
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace

BoundaryRays rank2_boundary_rays(const Lattice& L, std::optional<QVec> reference)
{
    check_hyperbolic_plane(L);
    const QVec h = reference ? *reference : find_positive_vector(L);
    if (L.square(h) <= 0)
        throw Error("reference vector must have positive square");
    const Rational a = L.gram()(0, 0), b = L.gram()(0, 1), c = L.gram()(1, 1);
    BoundaryRays out;
    out.discriminant = b * b - a * c;
    Rational root;
    if (rational_sqrt(out.discriminant, root)) {
        out.rational = true;
        std::vector<QVec> rays;
        if (a != 0)
            rays = {QVec{-b + root, a}, QVec{-b - root, a}};
        else
            rays = {QVec{1, 0}, QVec{c, -2 * b}};
        for (std::size_t k = 0; k < 2; ++k) {
            QVec r = L.pair(rays[k], h) < 0 ? negate(rays[k]) : rays[k];
            out.rays[k] = primitive_direction(r);
        }
        if (out.rays[0] < out.rays[1])
            std::swap(out.rays[0], out.rays[1]);
        return out;
    }
    // sqrt(p/q) = sqrt(p q) / q
    const Integer d = out.discriminant.get_num() * out.discriminant.get_den();
    const Rational inv_q = Rational(1) / out.discriminant.get_den();
    const QVec gh = L.functional(h);
    for (std::size_t k = 0; k < 2; ++k) {
        const Rational pm = k == 0 ? inv_q : -inv_q;
        std::array<QuadSurd, 2> ray{QuadSurd{-b, pm, d}, QuadSurd{a, 0, d}};
        QuadSurd along{-b * gh[0] + a * gh[1], pm * gh[0], d};
        if (along.sign() < 0)
            for (auto& s : ray) {
                s.a = -s.a;
                s.b = -s.b;
            }
        out.surd_rays[k] = ray;
    }
    return out;
}

Isometry rank2_isometry_generator(const Lattice& L, long bound)
{
    check_hyperbolic_plane(L);
    if (rank2_boundary_rays(L).rational)
        throw Error("boundary rays are rational; no infinite-order rotation is expected");
    if (bound < 1)
        throw Error("search bound must be positive");
    const QVec h = find_positive_vector(L);
    const Rational a = L.gram()(0, 0), b = L.gram()(0, 1), c = L.gram()(1, 1);
    std::optional<std::tuple<Rational, ZVec>> best;
    for (long p = -bound; p <= bound; ++p)
        for (long r = -bound; r <= bound; ++r) {
            if (a * p * p + 2 * b * p * r + c * r * r != a)
                continue;
            // second column w: pair(v, w) = b and det[v w] = 1
            const Rational alpha = a * p + b * r, beta = b * p + c * r;
            const Rational q = (b * p - beta) / a;
            const Rational s = (alpha + r * b) / a;
            if (q.get_den() != 1 || s.get_den() != 1)
                continue;
            if (abs(q) > bound || abs(s) > bound)
                continue;
            const Rational trace = p + s;
            if (trace <= 2)
                continue;
            ZVec entries{Integer(p), q.get_num(), Integer(r), s.get_num()};
            if (!best || trace < std::get<0>(*best) || (trace == std::get<0>(*best) && entries < std::get<1>(*best)))
                best = std::make_tuple(trace, entries);
        }
    if (!best)
        throw Error("no infinite-order isometry with entries bounded by " + std::to_string(bound));
    const ZVec& e = std::get<1>(*best);
    ZMatrix m{{e[0], e[1]}, {e[2], e[3]}};
    Isometry g(L, m);
    if (L.pair(g.apply(h), h) <= 0)
        throw Error("internal: rotation exchanges the positive cone components");
    return g;
}

} // namespace conelat::domains
