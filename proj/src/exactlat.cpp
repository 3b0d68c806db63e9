#include "conelat/exactlat.hpp"

#include <algorithm>
#include <utility>

namespace conelat {

Lattice::Lattice(QMatrix gram, std::string label) : gram_(std::move(gram)), label_(std::move(label))
{
    if (!gram_.square() || gram_.rows() == 0)
        throw Error("Gram matrix must be square with positive rank");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw Error("Gram matrix is not symmetric");
    if (determinant(gram_) == 0)
        throw Error("Gram matrix is degenerate");
    gram_inverse_ = conelat::inverse(gram_);
    integral_ = is_integral(gram_);
}

bool Lattice::even() const
{
    if (!integral_)
        return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (mpz_odd_p(gram_(i, i).get_num_mpz_t()))
            return false;
    return true;
}

void Lattice::check_dimension(const QVec& v) const
{
    if (v.size() != rank())
        throw Error("vector of length " + std::to_string(v.size()) + " in a lattice of rank " +
                    std::to_string(rank()));
}

Rational Lattice::pair(const QVec& u, const QVec& v) const
{
    check_dimension(u);
    check_dimension(v);
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0)
            continue;
        Rational t = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            t += gram_(i, j) * v[j];
        s += u[i] * t;
    }
    return s;
}

QVec Lattice::functional(const QVec& v) const
{
    check_dimension(v);
    return gram_ * v;
}

Signature signature(const QMatrix& symmetric)
{
    if (!symmetric.square())
        throw Error("signature of a non-square matrix");
    QMatrix a = symmetric;
    const std::size_t n = a.rows();
    Signature sig;
    auto swap_index = [&](std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < n; ++j)
            std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i)
            std::swap(a(i, p), a(i, q));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && a(j, j) == 0)
                ++j;
            if (j < n) {
                swap_index(k, j);
            } else {
                j = k + 1;
                while (j < n && a(k, j) == 0)
                    ++j;
                if (j == n)
                    continue; // row k vanishes on the remaining block
                // e_k <- e_k + e_j makes the diagonal entry 2 a(k, j) != 0
                for (std::size_t c = 0; c < n; ++c)
                    a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    a(r, k) += a(r, j);
            }
        }
        const Rational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rational f = a(i, k) / pivot;
            for (std::size_t c = k; c < n; ++c)
                a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r)
                a(r, i) -= f * a(r, k);
        }
        if (pivot > 0)
            ++sig.plus;
        else
            ++sig.minus;
    }
    return sig;
}

Signature signature(const Lattice& L)
{
    return signature(L.gram());
}

QVec dual_class(const Lattice& L, const QVec& c)
{
    return L.functional(c);
}

QVec dual_class_inverse(const Lattice& L, const QVec& functional)
{
    L.check_dimension(functional);
    return L.gram_inverse() * functional;
}

Integer divisibility(const Lattice& L, const ZVec& v)
{
    if (!L.integral())
        throw Error("divisibility needs an integral Gram matrix");
    QVec q = to_rational(v);
    if (is_zero(q))
        throw Error("divisibility of the zero vector");
    return content(to_integer(L.functional(q)));
}

bool is_primitive(const ZVec& v)
{
    return content(v) == 1;
}

namespace {

// Unimodular row reduction of m restricted to the first `ncols` columns;
// returns the number of pivot rows, which are moved to the top.
std::size_t integer_row_reduce(ZMatrix& m, std::size_t ncols, bool reduce_above)
{
    auto swap_rows = [&](std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(q, j));
    };
    std::size_t cur = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t c = 0; c < ncols && cur < m.rows(); ++c) {
        for (;;) {
            std::size_t best = m.rows();
            for (std::size_t r = cur; r < m.rows(); ++r)
                if (m(r, c) != 0 && (best == m.rows() || abs(m(r, c)) < abs(m(best, c))))
                    best = r;
            if (best == m.rows())
                break;
            swap_rows(cur, best);
            bool done = true;
            for (std::size_t r = cur + 1; r < m.rows(); ++r) {
                if (m(r, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), m(cur, c).get_mpz_t());
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(r, j) -= q * m(cur, j);
                if (m(r, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (m(cur, c) == 0)
            continue;
        if (m(cur, c) < 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(cur, j) = -m(cur, j);
        pivots.emplace_back(cur, c);
        ++cur;
    }
    if (reduce_above) {
        for (auto [pr, pc] : pivots)
            for (std::size_t r = 0; r < pr; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, pc).get_mpz_t(), m(pr, pc).get_mpz_t());
                if (q != 0)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        m(r, j) -= q * m(pr, j);
            }
    }
    return cur;
}

} // namespace

ZMatrix hermite_form(const ZMatrix& m)
{
    ZMatrix a = m;
    std::size_t r = integer_row_reduce(a, a.cols(), true);
    ZMatrix h(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h(i, j) = a(i, j);
    return h;
}

ZVec smith_invariants(const ZMatrix& m)
{
    ZMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    ZVec out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows)
                return out;
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(t, j), a(bi, j));
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a(i, t), a(i, bj));
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a(i, j) -= q * a(t, j);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a(i, j) -= q * a(i, t);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c)
                            a(t, c) += a(i, c);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.push_back(abs(a(t, t)));
    }
    return out;
}

std::vector<ZVec> integer_kernel(const ZMatrix& m)
{
    const std::size_t n = m.cols(), k = m.rows();
    // [m^T | I]: unimodular row operations keep the right block a basis of Z^n.
    ZMatrix aug(n, k + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug(i, j) = m(j, i);
        aug(i, k + i) = 1;
    }
    std::size_t r = integer_row_reduce(aug, k, false);
    if (r == n)
        return {};
    ZMatrix ker(n - r, n);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ker(i - r, j) = aug(i, k + j);
    ZMatrix h = hermite_form(ker);
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < h.rows(); ++i)
        out.push_back(h.row(i));
    return out;
}

Sublattice orthogonal_complement(const Lattice& L, const std::vector<QVec>& S)
{
    std::vector<ZVec> rows;
    for (const auto& s : S) {
        QVec f = L.functional(s);
        if (!is_zero(f))
            rows.push_back(primitive_direction(f));
    }
    const std::size_t n = L.rank();
    std::vector<ZVec> basis;
    if (rows.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            ZVec e(n);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = integer_kernel(ZMatrix::from_rows(rows, n));
    }
    Sublattice sub;
    sub.basis = ZMatrix::from_columns(basis, n);
    QMatrix b = to_rational(sub.basis);
    sub.gram = b.transpose() * L.gram() * b;
    return sub;
}

bool is_isometry(const Lattice& L, const ZMatrix& M)
{
    if (M.rows() != L.rank() || M.cols() != L.rank())
        throw Error("isometry candidate has the wrong size");
    QMatrix q = to_rational(M);
    if (!(q.transpose() * L.gram() * q == L.gram()))
        return false;
    Rational d = determinant(q);
    return d == 1 || d == -1;
}

Isometry::Isometry(const Lattice& L, ZMatrix matrix) : matrix_(std::move(matrix))
{
    if (!is_isometry(L, matrix_))
        throw Error("matrix is not an isometry of the lattice");
}

QVec Isometry::apply(const QVec& v) const
{
    return to_rational(matrix_) * v;
}

Isometry Isometry::inverse(const Lattice& L) const
{
    return Isometry(L, to_integer(conelat::inverse(to_rational(matrix_))));
}

} // namespace conelat
