#include "conelat/zariski.hpp"

#include <algorithm>

namespace conelat::zariski {

bool negative_definite(const Lattice& L, const std::vector<QVec>& vectors)
{
    const std::size_t k = vectors.size();
    for (std::size_t m = 1; m <= k; ++m) {
        QMatrix g(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                g(i, j) = L.pair(vectors[i], vectors[j]);
        Rational d = determinant(g);
        // sign of the m-th minor must be (-1)^m
        if ((m % 2 == 1 && d >= 0) || (m % 2 == 0 && d <= 0))
            return false;
    }
    return true;
}

namespace {

void validate_roots(const Lattice& L, const std::vector<QVec>& roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (L.square(roots[i]) >= 0)
            throw Error("root " + std::to_string(i) + " does not have negative square");
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (L.pair(roots[i], roots[j]) < 0)
                throw Error("roots " + std::to_string(i) + " and " + std::to_string(j) + " pair negatively");
    }
}

} // namespace

Decomposition decompose(const Lattice& L, const QVec& D, const std::vector<QVec>& roots)
{
    L.check_dimension(D);
    validate_roots(L, roots);
    const std::size_t k = roots.size();

    std::vector<bool> in_support(k, false);
    for (std::size_t i = 0; i < k; ++i)
        in_support[i] = L.pair(D, roots[i]) < 0;

    QVec coeff(k);
    QVec P = D;
    for (;;) {
        std::vector<std::size_t> S;
        for (std::size_t i = 0; i < k; ++i)
            if (in_support[i])
                S.push_back(i);
        std::vector<QVec> support_vectors;
        for (auto i : S)
            support_vectors.push_back(roots[i]);
        if (!negative_definite(L, support_vectors))
            throw Error("Zariski support has a Gram matrix that is not negative definite");

        // pair(D - sum a_i E_i, E_j) = 0 for j in S
        coeff.assign(k, Rational(0));
        if (!S.empty()) {
            QMatrix g(S.size(), S.size());
            QVec rhs(S.size());
            for (std::size_t r = 0; r < S.size(); ++r) {
                rhs[r] = L.pair(D, roots[S[r]]);
                for (std::size_t c = 0; c < S.size(); ++c)
                    g(r, c) = L.pair(roots[S[r]], roots[S[c]]);
            }
            QVec a = solve(g, rhs);
            for (std::size_t r = 0; r < S.size(); ++r) {
                if (a[r] < 0)
                    throw Error("Zariski iteration produced a negative coefficient");
                coeff[S[r]] = a[r];
            }
        }
        P = D;
        for (std::size_t i = 0; i < k; ++i)
            if (coeff[i] != 0)
                P = sub(P, scale(coeff[i], roots[i]));

        bool grew = false;
        for (std::size_t i = 0; i < k; ++i)
            if (!in_support[i] && L.pair(P, roots[i]) < 0) {
                in_support[i] = true;
                grew = true;
            }
        if (!grew)
            break;
    }

    Decomposition dec;
    dec.positive = P;
    dec.negative = sub(D, P);
    dec.coefficients = coeff;
    for (std::size_t i = 0; i < k; ++i)
        if (coeff[i] > 0)
            dec.support.push_back(i);
    dec.positive_square = L.square(P);
    dec.class_square = L.square(D);
    return dec;
}

SeReport se_membership(const Lattice& L, const QVec& alpha, const QVec& ell, const std::vector<QVec>& roots)
{
    if (L.square(ell) >= 0)
        throw Error("stably exceptional test needs a class of negative square");
    if (L.square(alpha) <= 0)
        throw Error("stably exceptional test needs alpha of positive square");
    SeReport rep;
    rep.decomposition = decompose(L, ell, roots);
    rep.pair_total = L.pair(alpha, ell);
    rep.pair_positive = L.pair(alpha, rep.decomposition.positive);
    rep.pair_negative = L.pair(alpha, rep.decomposition.negative);
    rep.negative_part_nonzero = !is_zero(rep.decomposition.negative);
    rep.chain_holds = rep.pair_positive < 0 || rep.pair_total >= rep.pair_negative;
    rep.member = rep.pair_total > 0;
    return rep;
}

} // namespace conelat::zariski
